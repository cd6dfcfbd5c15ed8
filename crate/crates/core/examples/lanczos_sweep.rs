//! Ritz values for every Krylov dimension on the 46-value spectrum, tracking
//! the one nearest the bottom eigenvalue. The close pair −13.1, −13.2 holds
//! its error on a plateau until the space resolves both.

use ritz_bounds::{
    figure1_spectrum, lanczos_decompose, nearest_eigenvalue, LinearOperator, OverlapProfile,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spectrum = figure1_spectrum();
    let op = LinearOperator::diagonal(&spectrum);
    let start = OverlapProfile::equal(spectrum.len()).to_vector();
    let lanczos = lanczos_decompose(&op, &start, spectrum.len())?;
    let bottom = spectrum.smallest();

    println!("   n   ritz nearest λ_46      |θ − λ_46|   nearest eigenvalue");
    for n in 1..=lanczos.dim() {
        let ritz = lanczos.ritz_values(n)?;
        let theta = ritz
            .values
            .iter()
            .copied()
            .min_by(|a, b| (a - bottom).abs().total_cmp(&(b - bottom).abs()))
            .unwrap();
        let nearest = nearest_eigenvalue(theta, &spectrum);
        println!(
            "{n:>4}  {theta:>20.14}  {:>14.3e}   {:>6}",
            (theta - bottom).abs(),
            nearest.eigenvalue
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
