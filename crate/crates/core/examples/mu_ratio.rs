//! How much the shift slows convergence: `μ'/μ` against the closed form,
//! across shifts above `λ_α`.

use ritz_bounds::{mu_ratio, Spectrum};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spectrum = Spectrum::new(vec![5.0, 2.0, 1.0, 0.0, -0.7, -4.0])?;
    let lam = spectrum.values();
    let alpha = 3;
    let (la, next, last) = (lam[alpha - 1], lam[alpha], lam[lam.len() - 1]);

    println!("shift     μ'          μ      μ'/μ    closed form");
    for shift in [1.1, 1.5, 2.0, 3.0, 3.4] {
        match mu_ratio(&spectrum, alpha, shift) {
            Ok(r) => {
                let closed = ((2.0 * shift - la - next) / (2.0 * shift - next - last)).sqrt();
                println!(
                    "{shift:>5}  {:.6}  {:.6}  {:.6}  {closed:.6}",
                    r.mu_prime, r.mu, r.ratio
                );
            }
            Err(e) => println!("{shift:>5}  {e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
