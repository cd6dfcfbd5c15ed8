use super::config::{ResolvedConfig, ShiftPolicy};
use super::{ExperimentConfig, HarnessError};
use crate::bounds::{bound_curve, kps_bound, kps_ingredients, optimize_shift, BoundFamily, Shift};
use crate::lanczos::{lanczos_decompose, nearest_eigenvalue};
use crate::operator::LinearOperator;

/// One row of output: the Ritz value nearest the target at one ambient
/// dimension, and one bound for it.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRecord {
    pub ambient_dim: usize,
    pub target_index: usize,
    /// Ritz value from `K(A, v, n)` closest to `λ_target`.
    pub ritz_value: f64,
    /// Eigenvalue closest to that Ritz value.
    pub nearest_eigenvalue: f64,
    pub abs_error: f64,
    pub family: BoundFamily,
    /// `+∞` before the bound's starting dimension.
    pub bound_value: f64,
    /// `None` for extremal families; `±∞` if optimization chose an infinite shift.
    pub shift: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOutput {
    pub records: Vec<ConvergenceRecord>,
    /// Non-fatal notes, e.g. shift optimization that missed its target.
    pub warnings: Vec<String>,
}

/// Runs one Lanczos sweep on `diag(spectrum)` and evaluates every requested
/// bound for every target.
///
/// Records come out ordered by target (config order), then dimension, then
/// family (config order). Interior families appear at even dimensions only.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutput, HarnessError> {
    let ResolvedConfig {
        config,
        spectrum,
        overlaps,
        max_dim,
    } = config.resolve()?;
    let op = LinearOperator::diagonal(&spectrum);
    let decomposition = lanczos_decompose(&op, &overlaps.to_vector(), max_dim)?;
    let ritz: Vec<Vec<f64>> = (1..=max_dim)
        .map(|n| {
            decomposition
                .ritz_values(n.min(decomposition.dim()))
                .map(|r| r.values)
        })
        .collect::<crate::Result<_>>()?;

    let mut records = Vec::new();
    let mut warnings = Vec::new();
    for (t_idx, target) in config.targets.iter().enumerate() {
        let alpha = target.index;
        let lambda = spectrum.values()[alpha - 1];

        let shift: Option<Shift> = match &target.shift {
            ShiftPolicy::Extremal => None,
            ShiftPolicy::Fixed(x) => Some(Shift::Finite(*x)),
            ShiftPolicy::Optimize(o) => {
                let choice = optimize_shift(
                    &spectrum,
                    &overlaps,
                    alpha,
                    o.target_error,
                    o.n_cap.unwrap_or(max_dim),
                )
                .map_err(|e| HarnessError::config(format!("`targets[{t_idx}]`: {e}")))?;
                if !choice.converged {
                    warnings.push(format!(
                        "target {alpha}: no shift reaches {:e} within dimension {}; using {} (bound {:e})",
                        o.target_error, choice.ambient_dim, choice.shift, choice.bound
                    ));
                }
                Some(choice.shift)
            }
        };

        let mut curves: Vec<(BoundFamily, Option<f64>, Vec<Option<f64>>)> = Vec::new();
        for &family in &target.families {
            let at_dim = family_values(&spectrum, &overlaps, alpha, family, shift, max_dim)
                .map_err(|e| HarnessError::config(format!("`targets[{t_idx}]` {family}: {e}")))?;
            let shift_col = if family.is_interior() {
                shift.map(|s| match s {
                    Shift::Finite(x) => x,
                    Shift::PlusInfinity => f64::INFINITY,
                    Shift::MinusInfinity => f64::NEG_INFINITY,
                })
            } else {
                None
            };
            curves.push((family, shift_col, at_dim));
        }

        for n in 1..=max_dim {
            let theta = ritz[n - 1]
                .iter()
                .copied()
                .min_by(|a, b| (a - lambda).abs().total_cmp(&(b - lambda).abs()))
                .expect("Ritz sets are non-empty");
            let nearest = nearest_eigenvalue(theta, &spectrum);
            for (family, shift_col, values) in &curves {
                if let Some(bound) = values[n - 1] {
                    records.push(ConvergenceRecord {
                        ambient_dim: n,
                        target_index: alpha,
                        ritz_value: theta,
                        nearest_eigenvalue: nearest.eigenvalue,
                        abs_error: nearest.error,
                        family: *family,
                        bound_value: bound,
                        shift: *shift_col,
                    });
                }
            }
        }
    }
    Ok(ExperimentOutput { records, warnings })
}

/// Bound per ambient dimension `1..=max_dim`; `None` where the family has no point.
fn family_values(
    spectrum: &crate::Spectrum,
    overlaps: &crate::OverlapProfile,
    alpha: usize,
    family: BoundFamily,
    shift: Option<Shift>,
    max_dim: usize,
) -> crate::Result<Vec<Option<f64>>> {
    let mut out = vec![None; max_dim];
    let curve_shift = if family.is_interior() { shift } else { None };
    match curve_shift {
        None | Some(Shift::Finite(_)) => {
            let c = bound_curve(
                spectrum,
                overlaps,
                alpha,
                family,
                curve_shift.and_then(|s| s.finite()),
                1..=max_dim,
            )?;
            for (n, v) in c.points {
                out[n - 1] = Some(v);
            }
        }
        Some(end) => {
            // An infinite shift reduces to the plain bound at one end of the spectrum.
            let ing = if end == Shift::PlusInfinity {
                kps_ingredients(spectrum, overlaps, alpha, None)?
            } else {
                kps_ingredients(
                    &spectrum.negated(),
                    &overlaps.reversed(),
                    spectrum.len() + 1 - alpha,
                    None,
                )?
            };
            for n in (2..=max_dim).step_by(2) {
                out[n - 1] = Some(if n < ing.j {
                    f64::INFINITY
                } else {
                    kps_bound(&ing, n, family.form())?
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(json: &str) -> ExperimentOutput {
        run_experiment(&ExperimentConfig::from_json(json).unwrap()).unwrap()
    }

    #[test]
    fn exhaustion_small() {
        let out = run(r#"{"spectrum": {"inline": [3, 2, 1, 0]}, "targets": [{"index": 1}]}"#);
        assert_eq!(out.records.len(), 4);
        assert!(out.records[3].abs_error <= 3e-10);
        for r in &out.records {
            assert!(r.abs_error <= r.bound_value * (1.0 + 1e-8) + 1e-12);
            assert_eq!(r.shift, None);
        }
    }

    #[test]
    fn empty_targets() {
        let out = run(r#"{"spectrum": "figure1", "targets": []}"#);
        assert!(out.records.is_empty());
        assert!(out.warnings.is_empty());
    }

    #[test]
    fn interior_rows_at_even_dims() {
        let out = run(r#"{"spectrum": {"inline": [2, 1, -1, -2]},
                "targets": [{"index": 2, "families": ["extremal-exact", "interior-exact"], "shift": {"fixed": 0.4}}]}"#);
        let interior: Vec<usize> = out
            .records
            .iter()
            .filter(|r| r.family == BoundFamily::InteriorExact)
            .map(|r| r.ambient_dim)
            .collect();
        assert_eq!(interior, vec![2, 4]);
        assert_eq!(out.records.len(), 6);
        assert!(out
            .records
            .iter()
            .filter(|r| r.family.is_interior())
            .all(|r| r.shift == Some(0.4)));
    }

    #[test]
    fn unconverged_optimization_warns() {
        let out = run(r#"{"spectrum": {"inline": [2, 1, -1, -2]},
                "targets": [{"index": 2, "families": ["interior-exact"], "shift": {"optimize": {"target_error": 1e-300}}}]}"#);
        assert_eq!(out.warnings.len(), 1);
    }
}
