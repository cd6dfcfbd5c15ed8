//! Vectors, symmetric operators and the Rayleigh quotient.
//!
//! Everything here is real and double precision. A Hermitian problem is
//! unitarily equivalent to a real diagonal one, so the diagonal operator is
//! the workhorse: an experiment is fully described by a [`Spectrum`] and the
//! start vector's [`OverlapProfile`] in the eigenbasis.

use std::ops::Deref;

use crate::error::{Error, Result};

/// Relative residual below which Gram-Schmidt declares the input contained in
/// the span of the basis. Scaled by `sqrt(N)`.
pub const BREAKDOWN_TOL: f64 = 1e-13;

/// A dense real vector with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty("vector"));
        }
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("vector"));
        }
        Ok(Self(entries))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0.0; n.max(1)])
    }

    /// The `k`-th canonical basis vector (0-based).
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[k] = 1.0;
        v
    }

    pub fn dot(&self, other: &[f64]) -> f64 {
        dot(&self.0, other)
    }

    pub fn norm(&self) -> f64 {
        norm(&self.0)
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self(self.0.iter().map(|x| c * x).collect())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub(crate) fn from_raw(entries: Vec<f64>) -> Self {
        debug_assert!(!entries.is_empty());
        Self(entries)
    }
}

impl Deref for Vector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    // Scaled to avoid overflow for large entries.
    let scale = a.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    scale
        * a.iter()
            .map(|x| (x / scale) * (x / scale))
            .sum::<f64>()
            .sqrt()
}

/// Eigenvalues sorted in descending order, `λ_1 ≥ λ_2 ≥ … ≥ λ_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty("spectrum"));
        }
        if values.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("spectrum"));
        }
        if let Some(position) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::UnsortedSpectrum {
                position: position + 1,
            });
        }
        Ok(Self(values))
    }

    /// Sorts arbitrary finite values into a spectrum.
    pub fn from_unsorted(mut values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("spectrum"));
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Self::new(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_k` for a 1-based index.
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                len: self.len(),
            });
        }
        Ok(self.0[k - 1])
    }

    pub fn largest(&self) -> f64 {
        self.0[0]
    }

    pub fn smallest(&self) -> f64 {
        self.0[self.0.len() - 1]
    }

    /// `λ_1 − λ_N`.
    pub fn span(&self) -> f64 {
        self.largest() - self.smallest()
    }

    /// Spectral norm `max(|λ_1|, |λ_N|)`.
    pub fn norm(&self) -> f64 {
        self.largest().abs().max(self.smallest().abs())
    }

    /// Spectrum of `−A`: negated and reversed so it stays descending.
    pub fn negated(&self) -> Self {
        Self(self.0.iter().rev().map(|x| -x).collect())
    }
}

/// Magnitudes `|(z_k, v)|` of the start vector along each eigenvector,
/// index-aligned with a [`Spectrum`] and normalized to unit length.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapProfile(Vec<f64>);

impl OverlapProfile {
    /// Takes absolute values and normalizes so the squares sum to one.
    pub fn new(magnitudes: Vec<f64>) -> Result<Self> {
        if magnitudes.is_empty() {
            return Err(Error::Empty("overlap profile"));
        }
        if magnitudes.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("overlap profile"));
        }
        let abs: Vec<f64> = magnitudes.iter().map(|x| x.abs()).collect();
        let n = norm(&abs);
        if n == 0.0 {
            return Err(Error::InvalidOverlaps("all magnitudes are zero".into()));
        }
        Ok(Self(abs.into_iter().map(|x| x / n).collect()))
    }

    /// Equal overlap `1/sqrt(N)` with every eigenvector.
    pub fn equal(n: usize) -> Self {
        let n = n.max(1);
        Self(vec![1.0 / (n as f64).sqrt(); n])
    }

    pub fn magnitudes(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Squared magnitude for a 0-based position.
    pub fn weight(&self, k: usize) -> f64 {
        self.0[k] * self.0[k]
    }

    /// Profile aligned with [`Spectrum::negated`].
    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Reorders entries so position `i` holds the entry at `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self(perm.iter().map(|&k| self.0[k]).collect())
    }

    /// The start vector itself, in the eigenbasis of a diagonal operator.
    pub fn to_vector(&self) -> Vector {
        Vector::from_raw(self.0.clone())
    }

    pub(crate) fn check_len(&self, spectrum: &Spectrum) -> Result<()> {
        if self.len() != spectrum.len() {
            return Err(Error::DimensionMismatch {
                expected: spectrum.len(),
                found: self.len(),
            });
        }
        Ok(())
    }
}

/// A symmetric linear map applied without forming its matrix.
pub trait Operator {
    fn dim(&self) -> usize;

    /// Writes `A x` into `y`. Both slices have length [`Operator::dim`].
    fn apply_into(&self, x: &[f64], y: &mut [f64]);

    /// An upper bound on the spectral norm, used to scale tolerances.
    fn norm_bound(&self) -> f64;

    fn apply(&self, x: &Vector) -> Result<Vector> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            });
        }
        let mut y = vec![0.0; self.dim()];
        self.apply_into(x, &mut y);
        Ok(Vector::from_raw(y))
    }
}

/// The two concrete operator kinds.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearOperator {
    /// Diagonal in the eigenbasis: `x ↦ (d_k x_k)`.
    Diagonal(Vec<f64>),
    /// Row-major symmetric `n × n` matrix.
    DenseSymmetric { n: usize, entries: Vec<f64> },
}

impl LinearOperator {
    pub fn diagonal(spectrum: &Spectrum) -> Self {
        Self::Diagonal(spectrum.values().to_vec())
    }

    /// Diagonal operator with entries in any order.
    pub fn diagonal_entries(entries: Vec<f64>) -> Result<Self> {
        Ok(Self::Diagonal(Vector::new(entries)?.into_inner()))
    }

    /// Dense operator from rows; the matrix must be exactly symmetric.
    pub fn dense(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty("matrix"));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("matrix"));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self::DenseSymmetric { n, entries })
    }
}

impl Operator for LinearOperator {
    fn dim(&self) -> usize {
        match self {
            Self::Diagonal(d) => d.len(),
            Self::DenseSymmetric { n, .. } => *n,
        }
    }

    fn apply_into(&self, x: &[f64], y: &mut [f64]) {
        match self {
            Self::Diagonal(d) => {
                for ((yk, dk), xk) in y.iter_mut().zip(d).zip(x) {
                    *yk = dk * xk;
                }
            }
            Self::DenseSymmetric { n, entries } => {
                for (yi, row) in y.iter_mut().zip(entries.chunks_exact(*n)) {
                    *yi = dot(row, x);
                }
            }
        }
    }

    fn norm_bound(&self) -> f64 {
        match self {
            Self::Diagonal(d) => d.iter().fold(0.0_f64, |m, x| m.max(x.abs())),
            // Infinity norm dominates the spectral norm.
            Self::DenseSymmetric { n, entries } => entries
                .chunks_exact(*n)
                .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
                .fold(0.0_f64, f64::max),
        }
    }
}

/// `A' = −(A − Λ)²` applied as two applications of `A`.
#[derive(Debug, Clone, Copy)]
pub struct ShiftedSquared<'a, O: ?Sized> {
    inner: &'a O,
    shift: f64,
}

impl<'a, O: Operator + ?Sized> ShiftedSquared<'a, O> {
    pub fn new(inner: &'a O, shift: f64) -> Self {
        Self { inner, shift }
    }
}

impl<O: Operator + ?Sized> Operator for ShiftedSquared<'_, O> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn apply_into(&self, x: &[f64], y: &mut [f64]) {
        let mut t = vec![0.0; x.len()];
        self.inner.apply_into(x, &mut t);
        for (tk, xk) in t.iter_mut().zip(x) {
            *tk -= self.shift * xk;
        }
        self.inner.apply_into(&t, y);
        for (yk, tk) in y.iter_mut().zip(&t) {
            *yk = -(*yk - self.shift * tk);
        }
    }

    fn norm_bound(&self) -> f64 {
        let r = self.inner.norm_bound() + self.shift.abs();
        r * r
    }
}

/// `(x, A x) / (x, x)`, a weighted mean of the eigenvalues of `A`.
pub fn rayleigh_quotient<O: Operator + ?Sized>(x: &Vector, op: &O) -> Result<f64> {
    let ax = op.apply(x)?;
    let xx = x.dot(x);
    if xx == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(x.dot(&ax) / xx)
}

/// Classical Gram-Schmidt applied twice. Accumulates the projection
/// coefficients into `coeffs` (one per basis vector) and returns the norm of
/// what remains.
pub(crate) fn orthogonalize_twice(w: &mut [f64], basis: &[Vector], coeffs: &mut [f64]) -> f64 {
    for _ in 0..2 {
        let h: Vec<f64> = basis.iter().map(|q| q.dot(w)).collect();
        for ((q, hk), ck) in basis.iter().zip(&h).zip(coeffs.iter_mut()) {
            *ck += hk;
            for (wi, qi) in w.iter_mut().zip(q.iter()) {
                *wi -= hk * qi;
            }
        }
    }
    norm(w)
}

/// Projects `x` off an orthonormal `basis` and normalizes the remainder.
///
/// Returns `None` when the remainder is below `1e-13·sqrt(N)·‖x‖`, i.e. `x`
/// lies in the span of the basis to working precision.
pub fn orthonormalize_against(x: &Vector, basis: &[Vector]) -> Option<Vector> {
    let scale = x.norm();
    if scale == 0.0 {
        return None;
    }
    let mut w = x.as_slice().to_vec();
    let mut coeffs = vec![0.0; basis.len()];
    let r = orthogonalize_twice(&mut w, basis, &mut coeffs);
    let tol = BREAKDOWN_TOL * (x.len() as f64).sqrt() * scale;
    if r <= tol {
        return None;
    }
    w.iter_mut().for_each(|wi| *wi /= r);
    Some(Vector::from_raw(w))
}
