use super::extremal::kps_ingredients;
use super::interior::InteriorSetup;
use super::{
    bound_curve, clamp_exp, log_bound, BoundCurve, BoundFamily, BoundForm, DegeneracyPolicy,
    KpsIngredients,
};
use crate::error::{Error, Result};
use crate::operator::{OverlapProfile, Spectrum};

/// Relative offset of the perturbed candidates on either side of a midpoint.
const MIDPOINT_OFFSET: f64 = 1e-9;

/// Further relative offsets, half a decade apart, from `1e-1` down to
/// `MIDPOINT_OFFSET`. Near a crossing `K'` grows as the gap above the target
/// closes, so the best shift often sits a finite distance away.
fn ladder() -> impl Iterator<Item = f64> {
    (2..18).map(|k| 10f64.powf(-0.5 * k as f64))
}

/// A shift for the interior bound; the infinite shifts stand for the plain
/// extremal bound on `A` (`+∞`) or `−A` (`−∞`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shift {
    Finite(f64),
    PlusInfinity,
    MinusInfinity,
}

impl Shift {
    pub fn finite(&self) -> Option<f64> {
        match *self {
            Shift::Finite(x) => Some(x),
            _ => None,
        }
    }

    fn magnitude(&self) -> f64 {
        self.finite().map_or(f64::INFINITY, f64::abs)
    }
}

impl std::fmt::Display for Shift {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Shift::Finite(x) => write!(f, "{x}"),
            Shift::PlusInfinity => f.write_str("+inf"),
            Shift::MinusInfinity => f.write_str("-inf"),
        }
    }
}

/// The selected shift with the dimension it needs.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftChoice {
    pub shift: Shift,
    /// Smallest ambient Krylov dimension (matrix-vector products) at which
    /// the exact bound reaches the target, or `n_cap` if it never does.
    pub ambient_dim: usize,
    /// Krylov dimension of the operator the bound is built on: `ambient/2`
    /// for a finite shift, `ambient` for an infinite one.
    pub inner_dim: usize,
    pub bound: f64,
    pub converged: bool,
    /// Exact bound for `ambient = 1..=n_cap`.
    pub curve: BoundCurve,
    /// Number of candidates that produced a bound.
    pub candidates_evaluated: usize,
    /// Best finite shift by the same ordering, even when an infinite one wins.
    pub best_finite: Option<ShiftCandidate>,
}

/// How one candidate shift fared.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftCandidate {
    pub shift: Shift,
    pub ambient_dim: usize,
    pub bound: f64,
    pub converged: bool,
}

/// One evaluable candidate: a shift and the ingredients of its bound.
struct Candidate {
    shift: Shift,
    ingredients: KpsIngredients,
    /// Subtracted from the log of the primed bound; `ln 2ν` or zero.
    log_scale: f64,
    /// Ambient dimensions per inner dimension.
    stride: usize,
}

impl Candidate {
    fn log_bound_at_inner(&self, inner: usize) -> f64 {
        log_bound(&self.ingredients, inner, BoundForm::Exact).expect("inner >= j") - self.log_scale
    }

    /// `(ambient, log bound)` at the first inner dimension reaching `log_target`,
    /// else at the largest inner dimension within the cap.
    fn first_hit(&self, log_target: f64, n_cap: usize) -> Option<(usize, f64, bool)> {
        let j = self.ingredients.j;
        let max_inner = n_cap / self.stride;
        if max_inner < j {
            return None;
        }
        for inner in j..=max_inner {
            let lb = self.log_bound_at_inner(inner);
            if lb <= log_target {
                return Some((inner * self.stride, lb, true));
            }
        }
        Some((
            max_inner * self.stride,
            self.log_bound_at_inner(max_inner),
            false,
        ))
    }
}

fn candidates(
    spectrum: &Spectrum,
    overlaps: &OverlapProfile,
    alpha: usize,
    exact: bool,
) -> Vec<Candidate> {
    let lam = spectrum.values();
    let n = lam.len();
    let delta = MIDPOINT_OFFSET * spectrum.span();
    let span = spectrum.span();
    let mut shifts = Vec::with_capacity(35 * n * (n - 1) / 2);
    for i in 0..n {
        for k in i + 1..n {
            let mid = 0.5 * (lam[i] + lam[k]);
            shifts.extend([mid - delta, mid + delta]);
            shifts.extend(ladder().flat_map(|r| [mid - r * span, mid + r * span]));
            if exact {
                shifts.push(mid);
            }
        }
    }
    shifts.sort_by(f64::total_cmp);
    shifts.dedup();

    let mut out: Vec<Candidate> = shifts
        .into_iter()
        .filter_map(|shift| {
            let setup = InteriorSetup::new(
                spectrum,
                overlaps,
                alpha,
                shift,
                None,
                DegeneracyPolicy::Merge,
            )
            .ok()?;
            Some(Candidate {
                shift: Shift::Finite(shift),
                ingredients: setup.ingredients,
                log_scale: (2.0 * setup.nu).ln(),
                stride: 2,
            })
        })
        .collect();

    if let Ok(ing) = kps_ingredients(spectrum, overlaps, alpha, None) {
        out.push(Candidate {
            shift: Shift::PlusInfinity,
            ingredients: ing,
            log_scale: 0.0,
            stride: 1,
        });
    }
    if let Ok(ing) = kps_ingredients(
        &spectrum.negated(),
        &overlaps.reversed(),
        n + 1 - alpha,
        None,
    ) {
        out.push(Candidate {
            shift: Shift::MinusInfinity,
            ingredients: ing,
            log_scale: 0.0,
            stride: 1,
        });
    }
    out
}

/// Picks the shift whose exact bound on `λ_α` first drops to `target_error`.
///
/// Candidates are the midpoints `(λ_i + λ_k)/2`, where two shifted
/// eigenvalues cross, each also perturbed by `±r·(λ_1 − λ_N)` for
/// `r = 1e-9` and a half-decade ladder of `r` up to `0.1`, plus the two
/// infinite shifts. Coinciding shifted eigenvalues are merged. The
/// winner needs the fewest ambient dimensions; ties go to the smaller bound
/// and then to the smaller `|Λ|`. `n_cap` caps the ambient dimension.
///
/// If no candidate reaches the target, the one with the smallest bound at
/// `n_cap` is returned with `converged = false`.
pub fn optimize_shift(
    spectrum: &Spectrum,
    overlaps: &OverlapProfile,
    alpha: usize,
    target_error: f64,
    n_cap: usize,
) -> Result<ShiftChoice> {
    optimize_shift_with(spectrum, overlaps, alpha, target_error, n_cap, true)
}

/// [`optimize_shift`] with control over the exact midpoints. Without them
/// only shifts at which no two shifted eigenvalues coincide are tried.
pub fn optimize_shift_with(
    spectrum: &Spectrum,
    overlaps: &OverlapProfile,
    alpha: usize,
    target_error: f64,
    n_cap: usize,
    exact_midpoints: bool,
) -> Result<ShiftChoice> {
    overlaps.check_len(spectrum)?;
    spectrum.eigenvalue(alpha)?;
    if !(target_error > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "target error must be positive, got {target_error}"
        )));
    }
    if n_cap == 0 {
        return Err(Error::InvalidArgument("n_cap must be positive".into()));
    }
    let log_target = target_error.ln();
    let pool = candidates(spectrum, overlaps, alpha, exact_midpoints);

    // (converged, ambient, log bound, |Λ|, index)
    type Key = (bool, usize, f64, f64, usize);
    let better = |a: &Key, b: &Key| {
        if a.0 != b.0 {
            a.0
        } else if a.0 && a.1 != b.1 {
            a.1 < b.1
        } else if a.2 != b.2 {
            a.2 < b.2
        } else {
            a.3 < b.3
        }
    };
    let mut best: Option<Key> = None;
    let mut best_finite: Option<Key> = None;
    let mut evaluated = 0;
    for (idx, c) in pool.iter().enumerate() {
        let Some((ambient, lb, hit)) = c.first_hit(log_target, n_cap) else {
            continue;
        };
        evaluated += 1;
        let key = (hit, ambient, lb, c.shift.magnitude(), idx);
        if best.map_or(true, |b| better(&key, &b)) {
            best = Some(key);
        }
        if c.shift.finite().is_some() && best_finite.map_or(true, |b| better(&key, &b)) {
            best_finite = Some(key);
        }
    }
    let (converged, ambient_dim, lb, _, idx) = best
        .ok_or_else(|| Error::InvalidArgument(format!("no bound is defined for target {alpha}")))?;
    let winner = &pool[idx];

    let curve = match winner.shift {
        Shift::Finite(x) => bound_curve(
            spectrum,
            overlaps,
            alpha,
            BoundFamily::InteriorExact,
            Some(x),
            1..=n_cap,
        )?,
        _ => {
            let points = (1..=n_cap)
                .map(|n| {
                    let v = if n < winner.ingredients.j {
                        f64::INFINITY
                    } else {
                        clamp_exp(winner.log_bound_at_inner(n))
                    };
                    (n, v)
                })
                .collect();
            BoundCurve {
                family: BoundFamily::ExtremalExact,
                target_index: alpha,
                shift: None,
                points,
            }
        }
    };

    Ok(ShiftChoice {
        shift: winner.shift,
        ambient_dim,
        inner_dim: ambient_dim / winner.stride,
        bound: clamp_exp(lb),
        converged,
        curve,
        candidates_evaluated: evaluated,
        best_finite: best_finite.map(|(converged, ambient_dim, lb, _, i)| ShiftCandidate {
            shift: pool[i].shift,
            ambient_dim,
            bound: clamp_exp(lb),
            converged,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_symmetric_case() {
        let s = Spectrum::new(vec![2.0, 1.0, -1.0, -2.0]).unwrap();
        let eq = OverlapProfile::equal(4);
        let c = optimize_shift(&s, &eq, 2, 1e-6, 200).unwrap();
        assert!(c.converged);
        assert!(c.bound <= 1e-6);
        assert_eq!(c.ambient_dim % c.inner_dim, 0);
        let f = c.best_finite.unwrap();
        assert!(f.ambient_dim >= c.ambient_dim);
        assert_eq!(f.ambient_dim % 2, 0);
    }

    #[test]
    fn top_eigenvalue_prefers_infinite_shift() {
        let s = Spectrum::new(vec![10.0, 1.0, 0.5, 0.0, -0.5]).unwrap();
        let c = optimize_shift(&s, &OverlapProfile::equal(5), 1, 1e-8, 100).unwrap();
        assert_eq!(c.shift, Shift::PlusInfinity);
        assert_eq!(c.curve.family, BoundFamily::ExtremalExact);
    }

    #[test]
    fn unconverged_is_flagged() {
        let s = Spectrum::new(vec![2.0, 1.0, -1.0, -2.0]).unwrap();
        let c = optimize_shift(&s, &OverlapProfile::equal(4), 2, 1e-300, 4).unwrap();
        assert!(!c.converged);
        assert_eq!(c.ambient_dim, 4);
    }

    #[test]
    fn rejects_bad_arguments() {
        let s = Spectrum::new(vec![2.0, 1.0, -1.0, -2.0]).unwrap();
        let eq = OverlapProfile::equal(4);
        assert!(optimize_shift(&s, &eq, 2, 0.0, 10).is_err());
        assert!(optimize_shift(&s, &eq, 5, 1e-3, 10).is_err());
        assert!(optimize_shift(&s, &eq, 2, 1e-3, 0).is_err());
    }
}
