use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::extremal::kps_ingredients;
use super::interior::InteriorSetup;
use super::{clamp_exp, log_bound, BoundForm, DegeneracyPolicy};
use crate::error::{Error, Result};
use crate::operator::{OverlapProfile, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundFamily {
    ExtremalExact,
    ExtremalAsymptotic,
    InteriorExact,
    InteriorAsymptotic,
}

impl BoundFamily {
    pub const ALL: [BoundFamily; 4] = [
        BoundFamily::ExtremalExact,
        BoundFamily::ExtremalAsymptotic,
        BoundFamily::InteriorExact,
        BoundFamily::InteriorAsymptotic,
    ];

    pub fn form(self) -> BoundForm {
        match self {
            BoundFamily::ExtremalExact | BoundFamily::InteriorExact => BoundForm::Exact,
            BoundFamily::ExtremalAsymptotic | BoundFamily::InteriorAsymptotic => {
                BoundForm::Asymptotic
            }
        }
    }

    pub fn is_interior(self) -> bool {
        matches!(
            self,
            BoundFamily::InteriorExact | BoundFamily::InteriorAsymptotic
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundFamily::ExtremalExact => "extremal-exact",
            BoundFamily::ExtremalAsymptotic => "extremal-asymptotic",
            BoundFamily::InteriorExact => "interior-exact",
            BoundFamily::InteriorAsymptotic => "interior-asymptotic",
        }
    }
}

impl std::fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for BoundFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown bound family `{s}`")))
    }
}

/// A bound evaluated along a range of ambient Krylov dimensions.
///
/// Dimensions below the bound's starting dimension carry `+∞`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCurve {
    pub family: BoundFamily,
    pub target_index: usize,
    pub shift: Option<f64>,
    pub points: Vec<(usize, f64)>,
}

impl BoundCurve {
    /// Bound at ambient dimension `n`, if the curve has a point there.
    pub fn at(&self, n: usize) -> Option<f64> {
        self.points.iter().find(|p| p.0 == n).map(|p| p.1)
    }

    /// First ambient dimension where the bound is at most `level`.
    pub fn first_below(&self, level: f64) -> Option<usize> {
        self.points.iter().find(|p| p.1 <= level).map(|p| p.0)
    }
}

/// Evaluates one bound family for target `alpha` at every ambient dimension
/// in `dims`.
///
/// Extremal families bound the distance from `λ_α` to the nearest Ritz
/// value: the smaller of the top-end bound (index `α`) and the bottom-end
/// bound (index `N − α + 1`), whichever are defined. Interior families need
/// a shift, merge coinciding shifted eigenvalues, and are evaluated at even
/// ambient dimensions only.
pub fn bound_curve(
    spectrum: &Spectrum,
    overlaps: &OverlapProfile,
    alpha: usize,
    family: BoundFamily,
    shift: Option<f64>,
    dims: RangeInclusive<usize>,
) -> Result<BoundCurve> {
    overlaps.check_len(spectrum)?;
    spectrum.eigenvalue(alpha)?;
    let form = family.form();
    let points = if family.is_interior() {
        let shift =
            shift.ok_or_else(|| Error::InvalidArgument(format!("{family} needs a shift")))?;
        let setup = InteriorSetup::new(
            spectrum,
            overlaps,
            alpha,
            shift,
            None,
            DegeneracyPolicy::Merge,
        )?;
        dims.filter(|n| n % 2 == 0 && *n > 0)
            .map(|n| {
                let inner = n / 2;
                let v = if inner < setup.ingredients.j {
                    f64::INFINITY
                } else {
                    clamp_exp(setup.log_bound(inner, form)?)
                };
                Ok((n, v))
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        if shift.is_some() {
            return Err(Error::InvalidArgument(format!("{family} takes no shift")));
        }
        let len = spectrum.len();
        let top = kps_ingredients(spectrum, overlaps, alpha, None);
        let bottom = kps_ingredients(
            &spectrum.negated(),
            &overlaps.reversed(),
            len + 1 - alpha,
            None,
        );
        let ends: Vec<_> = [&top, &bottom]
            .into_iter()
            .filter_map(|r| r.as_ref().ok())
            .collect();
        if ends.is_empty() {
            return Err(top.unwrap_err());
        }
        dims.filter(|n| *n > 0)
            .map(|n| {
                let v = ends
                    .iter()
                    .filter(|ing| n >= ing.j)
                    .map(|ing| log_bound(ing, n, form).map(clamp_exp))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .fold(f64::INFINITY, f64::min);
                Ok((n, v))
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok(BoundCurve {
        family,
        target_index: alpha,
        shift,
        points,
    })
}
