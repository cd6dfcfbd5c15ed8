//! Interior vs extremal bounds on the 46-value spectrum: dimension needed to
//! certify each target to 1e-8, and the shift the optimizer picks.

use ritz_bounds::spectra::FIGURE1_SHIFT;
use ritz_bounds::{
    bound_curve, figure1_spectrum, optimize_shift, BoundFamily, OverlapProfile, Shift,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spectrum = figure1_spectrum();
    let overlaps = OverlapProfile::equal(spectrum.len());
    let level = 1e-8;
    let cap = 200;

    println!("target  lambda   extremal  interior@{FIGURE1_SHIFT}  optimized shift");
    for alpha in [1, 23, 24, 25] {
        let ext = bound_curve(
            &spectrum,
            &overlaps,
            alpha,
            BoundFamily::ExtremalExact,
            None,
            1..=cap,
        )?;
        // λ_1 is the farthest eigenvalue from the shift: no interior bound.
        let int = bound_curve(
            &spectrum,
            &overlaps,
            alpha,
            BoundFamily::InteriorExact,
            Some(FIGURE1_SHIFT),
            1..=cap,
        )
        .ok();
        let choice = optimize_shift(&spectrum, &overlaps, alpha, level, cap)?;
        let fmt = |d: Option<usize>| d.map_or("-".to_string(), |d| d.to_string());
        let shift = match choice.shift {
            Shift::Finite(x) => format!("{x:.6}"),
            other => other.to_string(),
        };
        println!(
            "{alpha:>6}  {:>6.2}  {:>8}  {:>13}  {shift} (dim {})",
            spectrum.values()[alpha - 1],
            fmt(ext.first_below(level)),
            fmt(int.and_then(|c| c.first_below(level))),
            choice.ambient_dim
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
