//! Ritz values from Lanczos and bounds on how fast they converge, for both
//! extremal and interior eigenvalues of a symmetric operator.
//!
//! ```
//! use ritz_bounds::{kps_bound, kps_ingredients, BoundForm, OverlapProfile, Spectrum};
//!
//! let spectrum = Spectrum::new(vec![3.0, 2.0, 1.0, 0.0])?;
//! let ing = kps_ingredients(&spectrum, &OverlapProfile::equal(4), 1, None)?;
//! assert!((kps_bound(&ing, 2, BoundForm::Exact)? - 2.25).abs() < 1e-12);
//! # Ok::<(), ritz_bounds::Error>(())
//! ```

pub mod bounds;
pub mod chebyshev;
pub mod error;
pub mod harness;
pub mod lanczos;
pub mod operator;
pub mod spectra;

pub use bounds::{
    bar_theta, bound_curve, interior_bound, kps_bound, kps_bound_lower_end, kps_ingredients,
    mu_ratio, optimize_shift, optimize_shift_with, shift_spectrum, BoundCurve, BoundFamily,
    BoundForm, DegeneracyPolicy, InteriorBoundResult, InteriorOptions, KMode, KpsIngredients,
    MuRatio, Shift, ShiftCandidate, ShiftChoice, ShiftedSpectrum,
};
pub use chebyshev::{cheb_eval, cheb_log_eval, cheb_log_growth};
pub use error::{Error, Result};
pub use lanczos::{
    error_to_nearest, lanczos_decompose, nearest_eigenvalue, ritz_sweep, tridiagonal_eigenvalues,
    tridiagonal_eigenvalues_bisection, LanczosDecomposition, NearestEigenvalue, RitzSet,
};
pub use operator::{
    rayleigh_quotient, LinearOperator, Operator, OverlapProfile, ShiftedSquared, Spectrum, Vector,
};
pub use spectra::{banded_spectrum, equal_overlap_start, figure1_spectrum, BandedSpectrumSpec};
