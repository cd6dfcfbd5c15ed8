use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::bounds::BoundFamily;
use crate::operator::{OverlapProfile, Spectrum};
use crate::spectra::{banded_spectrum, figure1_spectrum, BandedSpectrumSpec};

/// Experiment description, read from JSON.
///
/// ```json
/// {
///   "spectrum": "figure1",
///   "overlaps": "equal",
///   "targets": [
///     { "index": 24, "families": ["extremal-exact", "interior-exact"], "shift": { "fixed": 0.45 } }
///   ],
///   "max_dim": 46,
///   "output": "out.csv"
/// }
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    /// Free-form note, ignored by the run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub spectrum: SpectrumSource,
    #[serde(default)]
    pub overlaps: OverlapSource,
    #[serde(default)]
    pub targets: Vec<TargetSpec>,
    /// Largest ambient Krylov dimension; defaults to the matrix size.
    #[serde(default)]
    pub max_dim: Option<usize>,
    /// CSV destination; standard output when absent.
    #[serde(default)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSource {
    Figure1,
    /// Descending eigenvalues.
    Inline(Vec<f64>),
    Banded(BandedSpectrumSpec),
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OverlapSource {
    #[default]
    Equal,
    /// Magnitudes aligned with the eigenvalues; normalized on load.
    Inline(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetSpec {
    /// 1-based index, eigenvalues in descending order.
    pub index: usize,
    #[serde(default = "default_families")]
    pub families: Vec<BoundFamily>,
    #[serde(default)]
    pub shift: ShiftPolicy,
}

fn default_families() -> Vec<BoundFamily> {
    vec![BoundFamily::ExtremalExact]
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftPolicy {
    #[default]
    Extremal,
    Fixed(f64),
    Optimize(OptimizeSpec),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptimizeSpec {
    pub target_error: f64,
    /// Ambient dimension cap; defaults to `max_dim`.
    #[serde(default)]
    pub n_cap: Option<usize>,
}

/// A config with its spectrum and start vector built and checked.
#[derive(Debug, Clone)]
pub struct ResolvedConfig {
    pub config: ExperimentConfig,
    pub spectrum: Spectrum,
    pub overlaps: OverlapProfile,
    pub max_dim: usize,
}

impl ExperimentConfig {
    /// Parses JSON. Errors carry the line, column and field path.
    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            let field = if path == "." {
                String::new()
            } else {
                format!(" at `{path}`")
            };
            HarnessError::config(format!(
                "line {} column {}{field}: {inner}",
                inner.line(),
                inner.column()
            ))
        })
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        Self::from_json(&text).map_err(|e| e.with_path(path))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config is always serializable")
    }

    /// Builds the spectrum and start vector and validates every target.
    pub fn resolve(&self) -> Result<ResolvedConfig, HarnessError> {
        let spectrum = match &self.spectrum {
            SpectrumSource::Figure1 => figure1_spectrum(),
            SpectrumSource::Inline(v) => {
                Spectrum::new(v.clone()).map_err(|e| field_error("spectrum.inline", e))?
            }
            SpectrumSource::Banded(b) => {
                banded_spectrum(b).map_err(|e| field_error("spectrum.banded", e))?
            }
        };
        let n = spectrum.len();
        let overlaps = match &self.overlaps {
            OverlapSource::Equal => OverlapProfile::equal(n),
            OverlapSource::Inline(v) => {
                if v.len() != n {
                    return Err(HarnessError::config(format!(
                        "`overlaps.inline` has {} entries but the spectrum has {n}",
                        v.len()
                    )));
                }
                OverlapProfile::new(v.clone()).map_err(|e| field_error("overlaps.inline", e))?
            }
        };
        let max_dim = self.max_dim.unwrap_or(n);
        if max_dim == 0 || max_dim > n {
            return Err(HarnessError::config(format!(
                "`max_dim` must be in 1..={n}, got {max_dim}"
            )));
        }
        for (i, t) in self.targets.iter().enumerate() {
            if t.index == 0 || t.index > n {
                return Err(HarnessError::config(format!(
                    "`targets[{i}].index` must be in 1..={n}, got {}",
                    t.index
                )));
            }
            let interior = t.families.iter().any(|f| f.is_interior());
            match t.shift {
                ShiftPolicy::Extremal if interior => {
                    return Err(HarnessError::config(format!(
                        "`targets[{i}].shift`: interior families need a fixed or optimized shift"
                    )))
                }
                ShiftPolicy::Fixed(x) if !x.is_finite() => {
                    return Err(HarnessError::config(format!(
                        "`targets[{i}].shift.fixed` must be finite"
                    )))
                }
                ShiftPolicy::Optimize(ref o) if !(o.target_error > 0.0) => {
                    return Err(HarnessError::config(format!(
                        "`targets[{i}].shift.optimize.target_error` must be positive"
                    )))
                }
                ShiftPolicy::Optimize(OptimizeSpec { n_cap: Some(0), .. }) => {
                    return Err(HarnessError::config(format!(
                        "`targets[{i}].shift.optimize.n_cap` must be positive"
                    )))
                }
                _ => {}
            }
        }
        Ok(ResolvedConfig {
            config: self.clone(),
            spectrum,
            overlaps,
            max_dim,
        })
    }
}

fn field_error(field: &str, e: crate::Error) -> HarnessError {
    HarnessError::config(format!("`{field}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_sources() {
        let c = ExperimentConfig::from_json(
            r#"{"spectrum": {"inline": [3, 2, 1, 0]}, "overlaps": {"inline": [1, 1, 1, 1]},
                "targets": [{"index": 2, "families": ["interior-exact"], "shift": {"optimize": {"target_error": 1e-6}}}],
                "max_dim": 4}"#,
        )
        .unwrap();
        let r = c.resolve().unwrap();
        assert_eq!(r.overlaps.magnitudes(), &[0.5; 4]);
        assert_eq!(r.max_dim, 4);

        let c = ExperimentConfig::from_json(
            r#"{"spectrum": {"banded": {"bands": 2, "total": 4, "void": 0.5, "range": [0, 1]}}}"#,
        )
        .unwrap();
        assert_eq!(
            c.resolve().unwrap().spectrum.values(),
            &[1.0, 0.875, 0.25, 0.125]
        );

        let c =
            ExperimentConfig::from_json(r#"{"spectrum": "figure1", "targets": [{"index": 1}]}"#)
                .unwrap();
        assert_eq!(c.targets[0].families, vec![BoundFamily::ExtremalExact]);
        assert_eq!(c.targets[0].shift, ShiftPolicy::Extremal);
        assert_eq!(c.resolve().unwrap().max_dim, 46);
    }

    #[test]
    fn round_trips_through_json() {
        let c = ExperimentConfig::from_json(
            r#"{"spectrum": "figure1", "targets": [{"index": 24, "families": ["interior-asymptotic"], "shift": {"fixed": 0.45}}], "output": "x.csv"}"#,
        )
        .unwrap();
        assert_eq!(ExperimentConfig::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let e = ExperimentConfig::from_json(
            "{\"spectrum\": \"figure1\",\n \"targets\": [{\"index\": \"one\"}]}",
        )
        .unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("line 2"), "{msg}");
        assert!(msg.contains("targets[0].index"), "{msg}");
        assert_eq!(e.exit_code(), 1);

        let e = ExperimentConfig::from_json(r#"{"spectrum": "figure1", "extra": 1}"#).unwrap_err();
        assert!(e.to_string().contains("extra"));

        let c =
            ExperimentConfig::from_json(r#"{"spectrum": "figure1", "targets": [{"index": 47}]}"#)
                .unwrap();
        assert!(c
            .resolve()
            .unwrap_err()
            .to_string()
            .contains("targets[0].index"));

        let c = ExperimentConfig::from_json(
            r#"{"spectrum": "figure1", "targets": [{"index": 3, "families": ["interior-exact"]}]}"#,
        )
        .unwrap();
        assert!(c
            .resolve()
            .unwrap_err()
            .to_string()
            .contains("targets[0].shift"));

        let c = ExperimentConfig::from_json(r#"{"spectrum": {"inline": [1, 2]}}"#).unwrap();
        assert!(c
            .resolve()
            .unwrap_err()
            .to_string()
            .contains("spectrum.inline"));
    }
}
