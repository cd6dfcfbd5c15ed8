//! Choosing the shift for an interior eigenvalue of the 46-value spectrum:
//! the winner, the best finite shift, and the bound curve it gives.

use ritz_bounds::{figure1_spectrum, optimize_shift, OverlapProfile};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spectrum = figure1_spectrum();
    let overlaps = OverlapProfile::equal(spectrum.len());
    for alpha in [1, 24, 45] {
        let choice = optimize_shift(&spectrum, &overlaps, alpha, 1e-8, 200)?;
        println!(
            "λ_{alpha} = {}: shift {} reaches {:.2e} at ambient dim {} ({} candidates)",
            spectrum.values()[alpha - 1],
            choice.shift,
            choice.bound,
            choice.ambient_dim,
            choice.candidates_evaluated
        );
        if let Some(f) = choice.best_finite {
            println!("    best finite shift {} needs {}", f.shift, f.ambient_dim);
        }
        let curve: Vec<String> = (10..=choice.ambient_dim.min(60))
            .step_by(10)
            .filter_map(|n| choice.curve.at(n).map(|b| format!("n={n}: {b:.1e}")))
            .collect();
        println!("    {}", curve.join("  "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
