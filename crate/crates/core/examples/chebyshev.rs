//! Chebyshev polynomials inside and outside `[−1, 1]`, and the log-space
//! evaluation that keeps large degrees finite.

use ritz_bounds::chebyshev::{growth_rate_from_mu, log_cosh};
use ritz_bounds::{cheb_eval, cheb_log_eval, cheb_log_growth};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for x in [-1.0, -0.3, 0.5, 1.0] {
        println!("T_7({x:>4}) = {:>10.6}", cheb_eval(7, x));
    }

    let x = 1.5;
    for n in [1, 5, 20, 400, 2000] {
        let direct = cheb_eval(n, x);
        println!(
            "n = {n:>4}  T_n(1.5) = {direct:>12.6e}  ln T_n(1.5) = {:>12.6}",
            cheb_log_eval(n, x)?
        );
    }
    println!("growth rate acosh(1.5) = {:.15}", cheb_log_growth(1, x)?);

    // γ = 1 + 2μ² gives acosh γ = 2 asinh μ.
    let mu = 0.25;
    let g = growth_rate_from_mu(mu);
    println!(
        "μ = {mu}: rate {g:.15}, acosh(1 + 2μ²) = {:.15}",
        (1.0 + 2.0 * mu * mu).acosh()
    );
    println!("ln cosh(500·rate) = {:.6}", log_cosh(500.0 * g));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
