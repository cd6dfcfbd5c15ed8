//! Banded test spectra and how the extremal bound depends on the void
//! between bands.

use ritz_bounds::{
    banded_spectrum, equal_overlap_start, kps_bound, kps_ingredients, BandedSpectrumSpec, BoundForm,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for void in [0.0, 0.1, 0.3, 0.6] {
        let spec = BandedSpectrumSpec {
            bands: 4,
            total: 40,
            void,
            range: [-1.0, 1.0],
            allow_degenerate: false,
        };
        let spectrum = banded_spectrum(&spec)?;
        let overlaps = equal_overlap_start(spectrum.len())?;
        let j = 10;
        let ing = kps_ingredients(&spectrum, &overlaps, j, None)?;
        println!(
            "void {void:.1}: δ = {:.4}, λ_10 − λ_11 = {:.4}, μ = {:.4}, K = {:.2e}, bound at n = 40: {:.2e}",
            spec.spacing(),
            spectrum.values()[j - 1] - spectrum.values()[j],
            ing.mu,
            ing.k_factor,
            kps_bound(&ing, 40, BoundForm::Exact)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
