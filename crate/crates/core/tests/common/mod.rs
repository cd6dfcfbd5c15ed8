#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ritz_bounds::{OverlapProfile, Spectrum};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` distinct eigenvalues in `[-1, 1]` with every gap at least
/// `min_gap_rel · span`. Gap sizes are either uniform or strongly skewed
/// (cubed), to mix near-clusters with isolated values.
pub fn random_spectrum(rng: &mut impl Rng, n: usize, min_gap_rel: f64) -> Spectrum {
    assert!(n >= 2);
    let skew = if rng.gen_bool(0.5) { 1 } else { 3 };
    let raw: Vec<f64> = (0..n - 1).map(|_| rng.gen::<f64>().powi(skew)).collect();
    let sum: f64 = raw.iter().sum();
    // c ≥ min_gap_rel · ((n−1)c + sum)
    let floor = 1.01 * min_gap_rel * sum / (1.0 - min_gap_rel * (n - 1) as f64);
    let gaps: Vec<f64> = raw.iter().map(|g| g + floor).collect();
    let total: f64 = gaps.iter().sum();
    let mut values = Vec::with_capacity(n);
    let mut x = 1.0;
    values.push(x);
    for g in gaps {
        x -= 2.0 * g / total;
        values.push(x);
    }
    Spectrum::new(values).unwrap()
}

pub fn random_overlaps(rng: &mut impl Rng, n: usize) -> OverlapProfile {
    OverlapProfile::new((0..n).map(|_| rng.gen_range(0.05..1.0)).collect()).unwrap()
}

/// Smallest gap relative to the span.
pub fn min_gap_rel(s: &Spectrum) -> f64 {
    s.values()
        .windows(2)
        .map(|w| w[0] - w[1])
        .fold(f64::INFINITY, f64::min)
        / s.span()
}
