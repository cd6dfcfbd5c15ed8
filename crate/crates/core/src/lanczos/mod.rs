//! Lanczos tridiagonalization and Ritz values for every Krylov dimension.
//!
//! Every new basis vector is re-orthogonalized (twice) against the whole
//! basis, so in the regime of interest (N up to a few hundred) the
//! decomposition behaves as in exact arithmetic: no ghost Ritz values.

mod tridiagonal;

pub use tridiagonal::{sturm_count, tridiagonal_eigenvalues, tridiagonal_eigenvalues_bisection};

use crate::error::{Error, Result};
use crate::operator::{orthogonalize_twice, Operator, Spectrum, Vector, BREAKDOWN_TOL};

/// Orthonormal Krylov basis `Q` and the tridiagonal `T = Qᵀ A Q`.
#[derive(Debug, Clone, PartialEq)]
pub struct LanczosDecomposition {
    /// Diagonal of `T`, length `m`.
    pub alpha: Vec<f64>,
    /// Off-diagonal of `T`, length `m − 1`, all positive.
    pub beta: Vec<f64>,
    pub basis: Vec<Vector>,
    /// The Krylov space became invariant before the requested dimension.
    pub exhausted: bool,
    /// Norm of the residual after the last step (`β_m`).
    pub residual_norm: f64,
}

impl LanczosDecomposition {
    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    /// Ritz values of the leading `n × n` section of `T`.
    pub fn ritz_values(&self, n: usize) -> Result<RitzSet> {
        self.check_section(n)?;
        let values = tridiagonal_eigenvalues(&self.alpha[..n], &self.beta[..n - 1])?;
        Ok(RitzSet {
            values,
            dimension: n,
            vectors: None,
        })
    }

    /// Ritz values together with Ritz vectors `y_j = Q s_j`, computed by
    /// inverse iteration on the section of `T`.
    pub fn ritz_pairs(&self, n: usize) -> Result<RitzSet> {
        let mut set = self.ritz_values(n)?;
        let (alpha, beta) = (&self.alpha[..n], &self.beta[..n - 1]);
        let dim = self.basis[0].len();
        let vectors = set
            .values
            .iter()
            .map(|&theta| {
                let s = tridiagonal::eigenvector(alpha, beta, theta);
                let mut y = vec![0.0; dim];
                for (q, sk) in self.basis.iter().zip(&s) {
                    for (yi, qi) in y.iter_mut().zip(q.iter()) {
                        *yi += sk * qi;
                    }
                }
                Vector::from_raw(y)
            })
            .collect();
        set.vectors = Some(vectors);
        Ok(set)
    }

    fn check_section(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.dim() {
            return Err(Error::IndexOutOfRange {
                index: n,
                len: self.dim(),
            });
        }
        Ok(())
    }
}

/// Ritz values `θ_1 ≥ … ≥ θ_m` from an `m`-dimensional subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct RitzSet {
    pub values: Vec<f64>,
    pub dimension: usize,
    pub vectors: Option<Vec<Vector>>,
}

/// Builds `K(A, v, n)` for `n` up to `max_dim` with full reorthogonalization.
///
/// Stops early with `exhausted = true` when the next Lanczos vector is below
/// `1e-13·‖A‖·sqrt(N)`, meaning the Krylov space is invariant.
pub fn lanczos_decompose<O: Operator + ?Sized>(
    op: &O,
    start: &Vector,
    max_dim: usize,
) -> Result<LanczosDecomposition> {
    let n = op.dim();
    if start.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: start.len(),
        });
    }
    if max_dim == 0 || max_dim > n {
        return Err(Error::InvalidArgument(format!(
            "max_dim {max_dim} must be in 1..={n}"
        )));
    }
    let v_norm = start.norm();
    if v_norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let tol = BREAKDOWN_TOL * op.norm_bound() * (n as f64).sqrt();

    let mut basis = vec![start.scaled(1.0 / v_norm)];
    let mut alpha = Vec::with_capacity(max_dim);
    let mut beta = Vec::with_capacity(max_dim.saturating_sub(1));
    let mut w = vec![0.0; n];
    let mut exhausted = false;
    let mut residual_norm = 0.0;

    for k in 0..max_dim {
        op.apply_into(&basis[k], &mut w);
        let mut coeffs = vec![0.0; k + 1];
        let r = orthogonalize_twice(&mut w, &basis, &mut coeffs);
        alpha.push(coeffs[k]);
        residual_norm = r;
        if k + 1 == max_dim {
            break;
        }
        if r <= tol {
            exhausted = true;
            break;
        }
        beta.push(r);
        basis.push(Vector::from_raw(w.iter().map(|x| x / r).collect()));
    }

    Ok(LanczosDecomposition {
        alpha,
        beta,
        basis,
        exhausted,
        residual_norm,
    })
}

/// Ritz values for every `n = 1..=m` from a single decomposition.
pub fn ritz_sweep<O: Operator + ?Sized>(
    op: &O,
    start: &Vector,
    max_dim: usize,
) -> Result<Vec<RitzSet>> {
    let decomposition = lanczos_decompose(op, start, max_dim)?;
    (1..=decomposition.dim())
        .map(|n| decomposition.ritz_values(n))
        .collect()
}

/// One Ritz value matched to its nearest eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearestEigenvalue {
    pub ritz: f64,
    /// 1-based index into the spectrum.
    pub index: usize,
    pub eigenvalue: f64,
    pub error: f64,
}

/// Pairs each Ritz value with its nearest eigenvalue. Ties go to the smaller
/// index.
pub fn error_to_nearest(ritz: &RitzSet, spectrum: &Spectrum) -> Vec<NearestEigenvalue> {
    ritz.values
        .iter()
        .map(|&theta| nearest_eigenvalue(theta, spectrum))
        .collect()
}

pub fn nearest_eigenvalue(theta: f64, spectrum: &Spectrum) -> NearestEigenvalue {
    let mut best = 0;
    let mut best_err = f64::INFINITY;
    for (k, &lambda) in spectrum.values().iter().enumerate() {
        let err = (theta - lambda).abs();
        if err < best_err {
            best = k;
            best_err = err;
        }
    }
    NearestEigenvalue {
        ritz: theta,
        index: best + 1,
        eigenvalue: spectrum.values()[best],
        error: best_err,
    }
}
