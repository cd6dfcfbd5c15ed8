use super::{
    clamp_exp, log_bound, BoundForm, DegeneracyPolicy, KpsIngredients, Levels, DEGENERACY_RTOL,
};
use crate::error::{Error, Result};
use crate::operator::{OverlapProfile, Spectrum};

/// Spectrum of `A' = −(A − Λ)²` in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedSpectrum {
    pub shift: f64,
    pub values: Vec<f64>,
    /// `perm[k]` is the 0-based index into the original spectrum of the
    /// `k`-th shifted value.
    pub perm: Vec<usize>,
    /// Overlap magnitudes in shifted order.
    pub overlaps: Vec<f64>,
}

impl ShiftedSpectrum {
    /// 0-based position of original index `alpha` (1-based).
    pub fn position_of(&self, alpha: usize) -> Option<usize> {
        self.perm.iter().position(|&p| p + 1 == alpha)
    }

    /// Groups values equal to within [`DEGENERACY_RTOL`] into levels and
    /// returns them with the level holding `position`.
    fn merged_levels(&self, position: usize) -> (Levels, usize) {
        let mut values: Vec<f64> = Vec::new();
        let mut weights: Vec<f64> = Vec::new();
        let mut target = 0;
        for (k, (&v, &c)) in self.values.iter().zip(&self.overlaps).enumerate() {
            match values.last() {
                Some(&last) if nearly_equal(last, v) => *weights.last_mut().unwrap() += c * c,
                _ => {
                    values.push(v);
                    weights.push(c * c);
                }
            }
            if k == position {
                target = values.len() - 1;
            }
        }
        (Levels { values, weights }, target)
    }

    fn plain_levels(&self) -> Levels {
        Levels {
            values: self.values.clone(),
            weights: self.overlaps.iter().map(|c| c * c).collect(),
        }
    }
}

fn nearly_equal(a: f64, b: f64) -> bool {
    (a - b).abs() <= DEGENERACY_RTOL * a.abs().max(b.abs())
}

/// Eigenvalues of `−(A − Λ)²`, sorted descending. Ties keep the original
/// (ascending index) order.
pub fn shift_spectrum(
    spectrum: &Spectrum,
    overlaps: &OverlapProfile,
    shift: f64,
) -> Result<ShiftedSpectrum> {
    overlaps.check_len(spectrum)?;
    if !shift.is_finite() {
        return Err(Error::NonFinite("shift"));
    }
    let shifted: Vec<f64> = spectrum
        .values()
        .iter()
        .map(|l| -(l - shift).powi(2))
        .collect();
    let mut perm: Vec<usize> = (0..shifted.len()).collect();
    perm.sort_by(|&a, &b| shifted[b].total_cmp(&shifted[a]));
    Ok(ShiftedSpectrum {
        shift,
        values: perm.iter().map(|&k| shifted[k]).collect(),
        overlaps: perm.iter().map(|&k| overlaps.magnitudes()[k]).collect(),
        perm,
    })
}

/// Options for [`interior_bound`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InteriorOptions<'a> {
    pub form: BoundForm,
    /// Ritz values of `A'` in descending order; switches `K'` to its
    /// a-posteriori form.
    pub ritz_prefix_primed: Option<&'a [f64]>,
    pub degeneracy: DegeneracyPolicy,
}

impl Default for InteriorOptions<'_> {
    fn default() -> Self {
        InteriorOptions::new(BoundForm::Exact)
    }
}

impl<'a> InteriorOptions<'a> {
    pub fn new(form: BoundForm) -> Self {
        InteriorOptions {
            form,
            ritz_prefix_primed: None,
            degeneracy: DegeneracyPolicy::Reject,
        }
    }

    pub fn with_ritz_prefix(mut self, prefix: &'a [f64]) -> Self {
        self.ritz_prefix_primed = Some(prefix);
        self
    }

    pub fn with_degeneracy(mut self, policy: DegeneracyPolicy) -> Self {
        self.degeneracy = policy;
        self
    }
}

/// Result of [`interior_bound`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InteriorBoundResult {
    pub alpha: usize,
    pub shift: f64,
    /// `ν = |λ_α − Λ|`.
    pub nu: f64,
    /// Primed ingredients; `ingredients.j` is the 1-based level of `λ_α`
    /// among the (possibly merged) shifted eigenvalues.
    pub ingredients: KpsIngredients,
    pub inner_dim: usize,
    pub ambient_dim: usize,
    /// `ε'`, the bound on `λ'_j − θ'_j`.
    pub epsilon_prime: f64,
    /// `ε' / (2ν)`.
    pub bound: f64,
}

/// Precomputed primed ingredients for one (target, shift) pair; evaluating at
/// many `n` then costs a few flops each.
#[derive(Debug, Clone, Copy)]
pub(crate) struct InteriorSetup {
    pub alpha: usize,
    pub shift: f64,
    pub nu: f64,
    pub ingredients: KpsIngredients,
}

impl InteriorSetup {
    pub fn new(
        spectrum: &Spectrum,
        overlaps: &OverlapProfile,
        alpha: usize,
        shift: f64,
        ritz_prefix_primed: Option<&[f64]>,
        policy: DegeneracyPolicy,
    ) -> Result<Self> {
        let lambda_alpha = spectrum.eigenvalue(alpha)?;
        let nu = (lambda_alpha - shift).abs();
        if nu == 0.0 {
            return Err(Error::ShiftCoincidesWithTarget);
        }
        let shifted = shift_spectrum(spectrum, overlaps, shift)?;
        let position = shifted.position_of(alpha).expect("alpha validated above");

        let (levels, j) = match policy {
            DegeneracyPolicy::Merge => shifted.merged_levels(position),
            DegeneracyPolicy::Reject => {
                let v = &shifted.values;
                let above = position > 0 && nearly_equal(v[position - 1], v[position]);
                let below = position + 1 < v.len() && nearly_equal(v[position], v[position + 1]);
                if above || below {
                    return Err(Error::DegeneratePrimedGap { j: position + 1 });
                }
                (shifted.plain_levels(), position)
            }
            DegeneracyPolicy::Force => (shifted.plain_levels(), position),
        };
        let prefix = ritz_prefix_primed.map(|t| &t[..t.len().min(j)]);
        let ingredients = levels.ingredients(j, prefix)?;
        Ok(InteriorSetup {
            alpha,
            shift,
            nu,
            ingredients,
        })
    }

    pub fn log_bound(&self, inner_dim: usize, form: BoundForm) -> Result<f64> {
        Ok(log_bound(&self.ingredients, inner_dim, form)? - (2.0 * self.nu).ln())
    }

    pub fn evaluate(&self, inner_dim: usize, form: BoundForm) -> Result<InteriorBoundResult> {
        let log_eps = log_bound(&self.ingredients, inner_dim, form)?;
        Ok(InteriorBoundResult {
            alpha: self.alpha,
            shift: self.shift,
            nu: self.nu,
            ingredients: self.ingredients,
            inner_dim,
            ambient_dim: 2 * inner_dim,
            epsilon_prime: clamp_exp(log_eps),
            bound: clamp_exp(log_eps - (2.0 * self.nu).ln()),
        })
    }
}

/// Bound on `|λ_α − θ̄_α|` from the shifted-and-squared operator, where
/// `θ̄_α = Λ ± sqrt(−θ'_j)` is rebuilt from a Ritz value of `A'` in
/// `K(A', v, n)`.
///
/// The same bound holds for the Ritz value of `A` from `K(A, v, 2n)` nearest
/// `λ_α` whenever the shift lies beyond `λ_α` and `λ_α` keeps its rank among
/// the shifted eigenvalues.
pub fn interior_bound(
    spectrum: &Spectrum,
    overlaps: &OverlapProfile,
    alpha: usize,
    shift: f64,
    inner_dim: usize,
    options: InteriorOptions<'_>,
) -> Result<InteriorBoundResult> {
    InteriorSetup::new(
        spectrum,
        overlaps,
        alpha,
        shift,
        options.ritz_prefix_primed,
        options.degeneracy,
    )?
    .evaluate(inner_dim, options.form)
}

/// Maps a Ritz value of `A'` back to the side of `Λ` where `λ_α` lies.
pub fn bar_theta(theta_prime: f64, shift: f64, lambda_alpha: f64) -> f64 {
    let xi = (-theta_prime).max(0.0).sqrt();
    if lambda_alpha >= shift {
        shift + xi
    } else {
        shift - xi
    }
}

/// Convergence exponents with and without the shift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuRatio {
    pub mu_prime: f64,
    pub mu: f64,
    pub ratio: f64,
}

/// `μ' = μ·sqrt((2Λ − λ_α − λ_{α+1}) / (2Λ − λ_{α+1} − λ_N))`.
///
/// Requires that `λ_{α+1}` directly follows `λ_α` among the shifted
/// eigenvalues and that `λ_N` remains the most negative one.
pub fn mu_ratio(spectrum: &Spectrum, alpha: usize, shift: f64) -> Result<MuRatio> {
    let n = spectrum.len();
    let lambda_alpha = spectrum.eigenvalue(alpha)?;
    if alpha + 1 >= n {
        return Err(Error::CorrespondenceBroken(
            "target needs two eigenvalues below it",
        ));
    }
    let shifted = shift_spectrum(spectrum, &OverlapProfile::equal(n), shift)?;
    let j = shifted.position_of(alpha).expect("alpha validated above");
    let lam = spectrum.values();
    let (next, last) = (lam[alpha], lam[n - 1]);
    if j + 1 >= n || shifted.values[j + 1] != -(next - shift).powi(2) {
        return Err(Error::CorrespondenceBroken(
            "lambda_{alpha+1} must follow lambda_alpha",
        ));
    }
    if shifted.values[n - 1] != -(last - shift).powi(2) {
        return Err(Error::CorrespondenceBroken("lambda_N must stay lowest"));
    }
    let mu = ((lambda_alpha - next) / (next - last)).sqrt();
    let ratio = ((2.0 * shift - lambda_alpha - next) / (2.0 * shift - next - last)).sqrt();
    Ok(MuRatio {
        mu_prime: mu * ratio,
        mu,
        ratio,
    })
}
