//! A-priori and a-posteriori bounds on `λ − θ` for Ritz values from Krylov
//! spaces.
//!
//! * [`kps_bound`] is the classical Kaniel–Paige–Saad bound for the `j`-th
//!   largest eigenvalue, built from a Chebyshev polynomial on
//!   `[λ_N, λ_{j+1}]` and the prefactor `K_j` that removes the Ritz values
//!   above the target.
//! * [`interior_bound`] applies the same machinery to `A' = −(A − Λ)²`, whose
//!   largest eigenvalues are those of `A` nearest the shift `Λ`, and maps the
//!   result back to `A`. The bound holds for `K(A, v, 2n)` because
//!   `K(A', v, n) ⊆ K(A, v, 2n)`.
//!
//! All bound arithmetic happens on logarithms. Values below `1e-300` are
//! reported as zero.

mod curve;
mod extremal;
mod interior;
mod shift;

pub use curve::{bound_curve, BoundCurve, BoundFamily};
pub use extremal::{kps_bound, kps_bound_lower_end, kps_ingredients, KpsIngredients};
pub use interior::{
    bar_theta, interior_bound, mu_ratio, shift_spectrum, InteriorBoundResult, InteriorOptions,
    MuRatio, ShiftedSpectrum,
};
pub use shift::{optimize_shift, optimize_shift_with, Shift, ShiftCandidate, ShiftChoice};

use crate::chebyshev::{growth_rate_from_mu, log_cosh};
use crate::error::{Error, Result};

/// Smallest bound value reported as non-zero.
pub const UNDERFLOW_CLAMP: f64 = 1e-300;

/// Relative tolerance under which two shifted eigenvalues are treated as equal.
pub const DEGENERACY_RTOL: f64 = 1e-12;

/// Rigorous Chebyshev form or the leading-order exponential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundForm {
    /// `span·(K tan∠)² / T_{n−j}(γ)²`.
    Exact,
    /// `4·span·(K tan∠)²·exp(−4(n−j)μ)`, the `O(μ²)` correction dropped.
    Asymptotic,
}

/// Whether `K` was formed from eigenvalues or from computed Ritz values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KMode {
    APriori,
    APosteriori,
}

/// How to treat a shift at which the target's shifted eigenvalue coincides
/// with another one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DegeneracyPolicy {
    /// Report [`Error::DegeneratePrimedGap`].
    #[default]
    Reject,
    /// Collapse equal shifted eigenvalues into one level carrying the summed
    /// weight. A Krylov space cannot tell exactly degenerate eigenvectors
    /// apart, so this is the bound for the cluster.
    Merge,
    /// Evaluate anyway; a zero gap gives `μ = 0` and a bound that never decays.
    Force,
}

/// Converts a log-space bound to a value, applying the underflow clamp.
pub(crate) fn clamp_exp(log_value: f64) -> f64 {
    if log_value == f64::NEG_INFINITY {
        return 0.0;
    }
    let v = log_value.exp();
    if v < UNDERFLOW_CLAMP {
        0.0
    } else {
        v
    }
}

/// Eigenvalue levels in descending order with the squared overlap of the
/// start vector on each level's eigenspace.
#[derive(Debug, Clone)]
pub(crate) struct Levels {
    pub values: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Levels {
    /// Ingredients for the `j`-th level (0-based).
    pub fn ingredients(&self, j: usize, ritz_prefix: Option<&[f64]>) -> Result<KpsIngredients> {
        let n = self.values.len();
        let label = j + 1;
        if j >= n {
            return Err(Error::IndexOutOfRange {
                index: label,
                len: n,
            });
        }
        if j + 1 == n {
            return Err(Error::NoGapBelow { j: label });
        }
        let lam = &self.values;
        let lam_n = lam[n - 1];
        let (lam_j, lam_next) = (lam[j], lam[j + 1]);
        if lam_next == lam_n {
            return Err(Error::DegenerateTail { j: label });
        }
        if self.weights[j] == 0.0 {
            return Err(Error::ZeroOverlap { index: label });
        }
        let mu = ((lam_j - lam_next).max(0.0) / (lam_next - lam_n)).sqrt();
        let tail: f64 = self.weights[j + 1..].iter().sum();
        let tan_angle = (tail / self.weights[j]).sqrt();

        let k_factor = match ritz_prefix {
            None => lam[..j]
                .iter()
                .map(|&l| (l - lam_n) / (l - lam_j))
                .product::<f64>(),
            Some(theta) => {
                if theta.len() < j {
                    return Err(Error::ShortRitzPrefix {
                        needed: j,
                        found: theta.len(),
                    });
                }
                // |l(x)| ≤ Π max(|θ_i − λ_N|, |θ_i − λ_{j+1}|)/|θ_i − λ_j| on
                // [λ_N, λ_{j+1}]; equals Π (θ_i − λ_N)/(θ_i − λ_j) once θ_i > λ_j.
                theta[..j]
                    .iter()
                    .map(|&t| (t - lam_n).abs().max((t - lam_next).abs()) / (t - lam_j).abs())
                    .product::<f64>()
            }
        };

        Ok(KpsIngredients {
            j: label,
            gamma_at_lambda_j: 1.0 + 2.0 * mu * mu,
            mu,
            k_factor,
            tan_angle,
            span: lam_j - lam_n,
            k_mode: if ritz_prefix.is_some() {
                KMode::APosteriori
            } else {
                KMode::APriori
            },
        })
    }
}

/// `ln` of the bound at Krylov dimension `n`.
pub(crate) fn log_bound(ing: &KpsIngredients, n: usize, form: BoundForm) -> Result<f64> {
    if n < ing.j {
        return Err(Error::DimensionBelowIndex { n, j: ing.j });
    }
    if ing.tan_angle == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    if ing.k_factor.is_infinite() {
        return Ok(f64::INFINITY);
    }
    let degree = (n - ing.j) as f64;
    let prefactor = ing.span.ln() + 2.0 * ing.k_factor.ln() + 2.0 * ing.tan_angle.ln();
    Ok(match form {
        BoundForm::Exact => prefactor - 2.0 * log_cosh(degree * growth_rate_from_mu(ing.mu)),
        BoundForm::Asymptotic => 4.0_f64.ln() + prefactor - 4.0 * degree * ing.mu,
    })
}
