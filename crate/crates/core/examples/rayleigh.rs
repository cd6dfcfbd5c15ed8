//! The Rayleigh quotient of a vector is a weighted mean of the eigenvalues,
//! and the shifted-squared operator has eigenvalues `−(λ − Λ)²`.

use ritz_bounds::{rayleigh_quotient, LinearOperator, Operator, ShiftedSquared, Spectrum, Vector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spectrum = Spectrum::new(vec![3.0, 1.0, -0.5, -2.0])?;
    let op = LinearOperator::diagonal(&spectrum);
    let x = Vector::new(vec![1.0, 2.0, 0.5, 1.0])?;

    let weights: Vec<f64> = x.as_slice().iter().map(|c| c * c).collect();
    let mean = weights
        .iter()
        .zip(spectrum.values())
        .map(|(w, l)| w * l)
        .sum::<f64>()
        / weights.iter().sum::<f64>();
    println!("rayleigh quotient {:.15}", rayleigh_quotient(&x, &op)?);
    println!("weighted mean     {mean:.15}");

    let shift = 0.25;
    let squared = ShiftedSquared::new(&op, shift);
    for k in 0..spectrum.len() {
        let e = Vector::unit(spectrum.len(), k);
        let got = squared.apply(&e)?.as_slice()[k];
        println!(
            "λ = {:>5}  −(λ − Λ)² = {:>8.4}  applied: {got:>8.4}",
            spectrum.values()[k],
            -(spectrum.values()[k] - shift).powi(2)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
