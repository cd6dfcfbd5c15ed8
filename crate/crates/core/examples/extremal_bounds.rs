//! Bounds on `λ_j − θ_j` for the top eigenvalues, checked against an actual
//! Lanczos run, in exact and asymptotic form and with an a-posteriori `K`.

use ritz_bounds::{
    kps_bound, kps_bound_lower_end, kps_ingredients, lanczos_decompose, BoundForm, LinearOperator,
    OverlapProfile, Spectrum,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spectrum = Spectrum::new((0..30).map(|k| 1.0 - (k as f64 / 29.0).powf(1.5)).collect())?;
    let overlaps = OverlapProfile::equal(spectrum.len());
    let lanczos = lanczos_decompose(
        &LinearOperator::diagonal(&spectrum),
        &overlaps.to_vector(),
        20,
    )?;

    for j in [1, 2] {
        let ing = kps_ingredients(&spectrum, &overlaps, j, None)?;
        println!(
            "j = {j}: μ = {:.4}  K = {:.4}  tan = {:.4}",
            ing.mu, ing.k_factor, ing.tan_angle
        );
        println!("   n        error        exact   asymptotic  a-posteriori");
        for n in (j..=20).step_by(3) {
            let theta = lanczos.ritz_values(n)?.values;
            let error = spectrum.values()[j - 1] - theta[j - 1];
            let post = kps_ingredients(&spectrum, &overlaps, j, Some(&theta))?;
            println!(
                "{n:>4}  {error:>11.3e}  {:>11.3e}  {:>11.3e}  {:>11.3e}",
                kps_bound(&ing, n, BoundForm::Exact)?,
                kps_bound(&ing, n, BoundForm::Asymptotic)?,
                kps_bound(&post, n, BoundForm::Exact)?,
            );
        }
    }

    let n = 12;
    let theta = lanczos.ritz_values(n)?.values;
    println!(
        "bottom: θ − λ_N = {:.3e} ≤ {:.3e}",
        theta[n - 1] - spectrum.smallest(),
        kps_bound_lower_end(&spectrum, &overlaps, 1, n, BoundForm::Exact, None)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
