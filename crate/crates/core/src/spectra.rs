//! Test spectra: uniform bands separated by voids, and the fixed 46-value
//! spectrum used for the shifted-bound comparison figure.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operator::{OverlapProfile, Spectrum};

/// `k` bands of `N/k` equally spaced eigenvalues inside `range`, consecutive
/// bands separated by an extra `void`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandedSpectrumSpec {
    pub bands: usize,
    pub total: usize,
    pub void: f64,
    /// `[low, high]`.
    pub range: [f64; 2],
    /// Permit `δ = 0`, i.e. `k` eigenvalues of multiplicity `N/k`.
    #[serde(default)]
    pub allow_degenerate: bool,
}

impl BandedSpectrumSpec {
    /// Spacing `δ = (width − (k − 1)Δ) / N`.
    pub fn spacing(&self) -> f64 {
        let width = self.range[1] - self.range[0];
        (width - (self.bands.saturating_sub(1)) as f64 * self.void) / self.total as f64
    }
}

/// Lays out the bands from the top of the range downward:
/// the `i`-th value of band `b` is `high − (b·N/k + i)·δ − b·Δ`.
pub fn banded_spectrum(spec: &BandedSpectrumSpec) -> Result<Spectrum> {
    let BandedSpectrumSpec {
        bands,
        total,
        void,
        range: [lo, hi],
        allow_degenerate,
    } = *spec;
    if bands == 0 || total == 0 {
        return Err(Error::InvalidBands(
            "bands and total must be positive".into(),
        ));
    }
    if total % bands != 0 {
        return Err(Error::InvalidBands(format!(
            "{total} eigenvalues do not split into {bands} bands"
        )));
    }
    if !(lo.is_finite() && hi.is_finite() && void.is_finite()) || hi < lo || void < 0.0 {
        return Err(Error::InvalidBands(format!(
            "bad range [{lo}, {hi}] or void {void}"
        )));
    }
    let delta = spec.spacing();
    if delta < 0.0 {
        return Err(Error::InvalidBands(format!(
            "voids exceed the range: spacing {delta}"
        )));
    }
    if delta == 0.0 && !allow_degenerate {
        return Err(Error::InvalidBands(
            "zero spacing gives degenerate bands".into(),
        ));
    }
    let per_band = total / bands;
    let values = (0..total)
        .map(|k| {
            let band = k / per_band;
            hi - k as f64 * delta - band as f64 * void
        })
        .collect();
    Spectrum::new(values)
}

/// The 46-value spectrum: isolated `λ_1`, a band of 21 values at spacing
/// 0.05, three well separated interior values (`λ_24` and `λ_25` symmetric
/// about 0.45), a band of 19 values at spacing 0.05, and the close bottom
/// pair −13.1, −13.2.
///
/// Only the bottom pair, the spacing and the size are fixed by the original
/// plot; the other values are a reconstruction.
pub const FIGURE1_EIGENVALUES: [f64; 46] = [
    14.0, 11.0, 10.95, 10.9, 10.85, 10.8, 10.75, 10.7, 10.65, 10.6, 10.55, 10.5, 10.45, 10.4,
    10.35, 10.3, 10.25, 10.2, 10.15, 10.1, 10.05, 10.0, 8.0, 1.95, -1.05, -9.0, -9.05, -9.1, -9.15,
    -9.2, -9.25, -9.3, -9.35, -9.4, -9.45, -9.5, -9.55, -9.6, -9.65, -9.7, -9.75, -9.8, -9.85,
    -9.9, -13.1, -13.2,
];

/// Shift used for the three interior targets 23, 24, 25.
pub const FIGURE1_SHIFT: f64 = 0.45;

pub fn figure1_spectrum() -> Spectrum {
    Spectrum::new(FIGURE1_EIGENVALUES.to_vec()).expect("constant is sorted")
}

pub fn equal_overlap_start(n: usize) -> Result<OverlapProfile> {
    if n == 0 {
        return Err(Error::Empty("overlap profile"));
    }
    Ok(OverlapProfile::equal(n))
}
