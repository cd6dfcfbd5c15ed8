//! Chebyshev polynomials of the first kind and their growth outside `[-1, 1]`.
//!
//! Convergence bounds divide by `T_m(γ)²` with `γ ≥ 1`, which spans dozens of
//! orders of magnitude, so the bound code works with `ln T_m(γ)` via
//! [`cheb_log_eval`] and never forms `T_m(γ)` directly.

use crate::error::{Error, Result};

/// `T_n(x)`.
///
/// Uses `cos(n·acos x)` on `[-1, 1]` and `cosh(n·acosh x)` outside, with the
/// parity `T_n(−x) = (−1)ⁿ T_n(x)` for `x < −1`. Overflows to `±∞` for huge
/// `n·acosh|x|`.
pub fn cheb_eval(n: u32, x: f64) -> f64 {
    if x.abs() <= 1.0 {
        return (f64::from(n) * x.acos()).cos();
    }
    let growth = f64::from(n) * x.abs().acosh();
    let magnitude = 0.5 * (growth.exp() + (-growth).exp());
    if x < 0.0 && n % 2 == 1 {
        -magnitude
    } else {
        magnitude
    }
}

/// `n·ln(x + sqrt(x² − 1)) = n·acosh(x)` for `x ≥ 1`.
///
/// `T_n(x) ≥ ½·exp` of this value.
pub fn cheb_log_growth(n: u32, x: f64) -> Result<f64> {
    if x.is_nan() || x < 1.0 {
        return Err(Error::InvalidArgument(format!(
            "log growth needs x >= 1, got {x}"
        )));
    }
    Ok(f64::from(n) * x.acosh())
}

/// Growth rate at `γ = 1 + 2μ²`.
///
/// `acosh(1 + 2μ²) = 2·asinh(μ)` exactly; the right-hand side keeps full
/// relative precision for small `μ`, where forming `1 + 2μ²` would not.
pub fn growth_rate_from_mu(mu: f64) -> f64 {
    2.0 * mu.asinh()
}

/// `ln T_n(x)` for `x ≥ 1`, without overflow.
pub fn cheb_log_eval(n: u32, x: f64) -> Result<f64> {
    let g = cheb_log_growth(n, x)?;
    Ok(log_cosh(g))
}

/// `ln cosh(g)` for `g ≥ 0`, i.e. `ln T_n` given the growth `g = n·acosh x`.
pub fn log_cosh(g: f64) -> f64 {
    g + (-2.0 * g).exp().ln_1p() - std::f64::consts::LN_2
}
