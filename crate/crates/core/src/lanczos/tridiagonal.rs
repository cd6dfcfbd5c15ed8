//! Symmetric tridiagonal eigenvalue kernels.
//!
//! `alpha` is the diagonal (length `m`), `beta` the off-diagonal (length
//! `m − 1`). The production path is implicit-shift QL with Wilkinson shifts;
//! Sturm-sequence bisection is kept as an independent check.

use crate::error::{Error, Result};

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

fn check_shape(alpha: &[f64], beta: &[f64]) -> Result<()> {
    if alpha.is_empty() {
        return Err(Error::Empty("tridiagonal"));
    }
    if beta.len() + 1 != alpha.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.len() - 1,
            found: beta.len(),
        });
    }
    if alpha.iter().chain(beta).any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("tridiagonal"));
    }
    Ok(())
}

/// All eigenvalues of `tridiag(beta, alpha, beta)`, sorted descending.
///
/// Zero off-diagonal entries split the matrix into independent blocks.
pub fn tridiagonal_eigenvalues(alpha: &[f64], beta: &[f64]) -> Result<Vec<f64>> {
    check_shape(alpha, beta)?;
    let n = alpha.len();
    let mut d = alpha.to_vec();
    let mut e = vec![0.0; n];
    e[..n - 1].copy_from_slice(beta);
    let anorm = d
        .iter()
        .zip(&e)
        .fold(0.0_f64, |m, (a, b)| m.max(a.abs() + 2.0 * b.abs()));

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                let scale = if dd > 0.0 { dd } else { anorm };
                if e[m].abs() <= f64::EPSILON * scale {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS_PER_EIGENVALUE {
                return Err(Error::NoConvergence { iterations: sweeps });
            }

            // Wilkinson shift from the leading 2x2 block.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0_f64, 1.0_f64, 0.0_f64);
            let mut deflated_early = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated_early = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated_early {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(|a, b| b.total_cmp(a));
    Ok(d)
}

/// Number of eigenvalues strictly below `x` (Sturm count via `LDLᵀ` pivots).
pub fn sturm_count(alpha: &[f64], beta: &[f64], x: f64) -> usize {
    let scale = alpha
        .iter()
        .chain(beta)
        .fold(f64::MIN_POSITIVE, |m, v| m.max(v.abs()));
    let guard = f64::EPSILON * scale * 1e-3;
    let mut count = 0;
    let mut prev_pivot = 1.0;
    for i in 0..alpha.len() {
        let mut q = alpha[i] - x;
        if i > 0 {
            q -= beta[i - 1] * beta[i - 1] / prev_pivot;
        }
        // A zero pivot is taken as a tiny negative one.
        if q.abs() < guard {
            q = -guard;
        }
        prev_pivot = q;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues by bisection on the Sturm count, sorted descending.
pub fn tridiagonal_eigenvalues_bisection(alpha: &[f64], beta: &[f64]) -> Result<Vec<f64>> {
    check_shape(alpha, beta)?;
    let n = alpha.len();
    // Gershgorin enclosure.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let radius = if i > 0 { beta[i - 1].abs() } else { 0.0 }
            + if i + 1 < n { beta[i].abs() } else { 0.0 };
        lo = lo.min(alpha[i] - radius);
        hi = hi.max(alpha[i] + radius);
    }
    let pad = f64::EPSILON * (lo.abs().max(hi.abs()) + 1.0) * 4.0;
    lo -= pad;
    hi += pad;

    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        // k-th smallest: the smallest x with count(x) > k.
        let (mut a, mut b) = (lo, hi);
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(alpha, beta, mid) > k {
                b = mid;
            } else {
                a = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    out.reverse();
    Ok(out)
}

/// Solves `(T − shift) x = rhs` by Gaussian elimination with partial
/// pivoting. Zero pivots are replaced by `tiny`.
pub(crate) fn solve_shifted(
    alpha: &[f64],
    beta: &[f64],
    shift: f64,
    rhs: &[f64],
    tiny: f64,
) -> Vec<f64> {
    let n = alpha.len();
    let mut d: Vec<f64> = alpha.iter().map(|a| a - shift).collect();
    let mut dl = beta.to_vec();
    let mut du = beta.to_vec();
    let mut b = rhs.to_vec();
    if n == 1 {
        let p = if d[0] == 0.0 { tiny } else { d[0] };
        return vec![b[0] / p];
    }
    for i in 0..n - 1 {
        if d[i].abs() >= dl[i].abs() {
            if d[i] == 0.0 {
                d[i] = tiny;
            }
            let fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
            dl[i] = 0.0;
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            let temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if i + 2 < n {
                dl[i] = du[i + 1];
                du[i + 1] = -fact * dl[i];
            } else {
                dl[i] = 0.0;
            }
            du[i] = temp;
            let temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - fact * b[i + 1];
        }
    }
    if d[n - 1] == 0.0 {
        d[n - 1] = tiny;
    }
    b[n - 1] /= d[n - 1];
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for i in (0..n.saturating_sub(2)).rev() {
        b[i] = (b[i] - du[i] * b[i + 1] - dl[i] * b[i + 2]) / d[i];
    }
    b
}

/// Unit eigenvector of `T` for the eigenvalue `theta` by inverse iteration.
pub(crate) fn eigenvector(alpha: &[f64], beta: &[f64], theta: f64) -> Vec<f64> {
    let n = alpha.len();
    let anorm = alpha
        .iter()
        .chain(beta)
        .fold(f64::MIN_POSITIVE, |m, v| m.max(v.abs()));
    let tiny = f64::EPSILON * anorm;
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 0.01 * i as f64).collect();
    for _ in 0..3 {
        let y = solve_shifted(alpha, beta, theta, &x, tiny);
        let nrm = crate::operator::norm(&y);
        if nrm == 0.0 || !nrm.is_finite() {
            break;
        }
        x = y.into_iter().map(|v| v / nrm).collect();
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn closed_form_cases() {
        let v = tridiagonal_eigenvalues(&[2.0, 2.0], &[1.0]).unwrap();
        assert!(close(&v, &[3.0, 1.0], 1e-14));

        let s2 = 2.0_f64.sqrt();
        let v = tridiagonal_eigenvalues(&[0.0, 0.0, 0.0], &[1.0, 1.0]).unwrap();
        assert!(close(&v, &[s2, 0.0, -s2], 1e-14), "{v:?}");

        assert_eq!(tridiagonal_eigenvalues(&[5.0], &[]).unwrap(), vec![5.0]);
    }

    #[test]
    fn splits_at_zero_offdiagonal() {
        let v = tridiagonal_eigenvalues(&[1.0, 4.0, 2.0], &[0.0, 0.0]).unwrap();
        assert_eq!(v, vec![4.0, 2.0, 1.0]);
        let v = tridiagonal_eigenvalues(&[2.0, 2.0, 7.0], &[1.0, 0.0]).unwrap();
        assert!(close(&v, &[7.0, 3.0, 1.0], 1e-14));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            tridiagonal_eigenvalues(&[1.0, f64::NAN], &[1.0]),
            Err(Error::NonFinite("tridiagonal"))
        );
        assert!(matches!(
            tridiagonal_eigenvalues(&[1.0, 2.0], &[]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(tridiagonal_eigenvalues(&[], &[]).is_err());
    }

    #[test]
    fn bisection_matches_closed_forms() {
        let s2 = 2.0_f64.sqrt();
        let v = tridiagonal_eigenvalues_bisection(&[0.0, 0.0, 0.0], &[1.0, 1.0]).unwrap();
        assert!(close(&v, &[s2, 0.0, -s2], 1e-14), "{v:?}");
        assert_eq!(sturm_count(&[2.0, 2.0], &[1.0], 2.0), 1);
    }

    #[test]
    fn free_laplacian_spectrum() {
        // Eigenvalues of tridiag(1, 0, 1) of size m are 2cos(kπ/(m+1)).
        let m = 40;
        let v = tridiagonal_eigenvalues(&vec![0.0; m], &vec![1.0; m - 1]).unwrap();
        for (k, x) in v.iter().enumerate() {
            let exact = 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (m + 1) as f64).cos();
            assert!((x - exact).abs() < 1e-13, "{k}: {x} vs {exact}");
        }
    }

    #[test]
    fn inverse_iteration_gives_eigenvector() {
        let alpha = [1.0, -2.0, 0.5, 3.0];
        let beta = [0.7, 1.1, 0.3];
        for theta in tridiagonal_eigenvalues(&alpha, &beta).unwrap() {
            let s = eigenvector(&alpha, &beta, theta);
            for i in 0..4 {
                let mut ts = alpha[i] * s[i];
                if i > 0 {
                    ts += beta[i - 1] * s[i - 1];
                }
                if i < 3 {
                    ts += beta[i] * s[i + 1];
                }
                assert!((ts - theta * s[i]).abs() < 1e-12);
            }
        }
    }
}
