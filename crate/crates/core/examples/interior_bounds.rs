//! An interior eigenvalue via the shifted-squared operator: Lanczos on
//! `−(A − Λ)²`, the primed bound on its top end, and the transfer back to
//! `|θ̄ − λ_α|`.

use ritz_bounds::{
    bar_theta, interior_bound, kps_bound, kps_ingredients, lanczos_decompose, shift_spectrum,
    BoundForm, InteriorOptions, LinearOperator, OverlapProfile, ShiftedSquared, Spectrum,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spectrum = Spectrum::new(vec![4.0, 3.1, 2.5, 1.0, 0.2, -0.4, -1.5, -3.0])?;
    let overlaps = OverlapProfile::equal(spectrum.len());
    let (alpha, shift) = (5, 0.35);
    let lambda = spectrum.values()[alpha - 1];

    let shifted = shift_spectrum(&spectrum, &overlaps, shift)?;
    println!(
        "shifted values {:?}",
        shifted
            .values
            .iter()
            .map(|v| format!("{v:.3}"))
            .collect::<Vec<_>>()
    );
    let level = shifted.position_of(alpha).ok_or("target lost")? + 1;
    println!("λ_{alpha} = {lambda} is shifted eigenvalue {level}");

    let op = LinearOperator::diagonal(&spectrum);
    let squared = ShiftedSquared::new(&op, shift);
    let lanczos = lanczos_decompose(&squared, &overlaps.to_vector(), spectrum.len())?;
    let plain = kps_ingredients(&spectrum, &overlaps, alpha, None)?;
    println!(" inner  ambient   |θ̄ − λ_α|     interior     extremal");
    for inner in level..=6 {
        let b = interior_bound(
            &spectrum,
            &overlaps,
            alpha,
            shift,
            inner,
            InteriorOptions::new(BoundForm::Exact),
        )?;
        let top = lanczos.ritz_values(inner)?.values[b.ingredients.j - 1];
        let theta = bar_theta(top, shift, lambda);
        println!(
            "{inner:>6}  {:>7}  {:>11.3e}  {:>11.3e}  {:>11.3e}",
            b.ambient_dim,
            (theta - lambda).abs(),
            b.bound,
            if b.ambient_dim >= alpha {
                kps_bound(&plain, b.ambient_dim, BoundForm::Exact)?
            } else {
                f64::INFINITY
            }
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
