use super::{clamp_exp, log_bound, BoundForm, KMode, Levels};
use crate::error::{Error, Result};
use crate::operator::{OverlapProfile, Spectrum};

/// Everything the bound needs about the target index `j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KpsIngredients {
    /// 1-based target index.
    pub j: usize,
    /// `γ(λ_j) = 1 + 2μ²`, the image of `λ_j` under the affine map sending
    /// `[λ_N, λ_{j+1}]` to `[−1, 1]`.
    pub gamma_at_lambda_j: f64,
    pub mu: f64,
    pub k_factor: f64,
    pub tan_angle: f64,
    /// `λ_j − λ_N`.
    pub span: f64,
    pub k_mode: KMode,
}

/// Ingredients for the `j`-th largest eigenvalue (1-based).
///
/// With `ritz_prefix = Some(θ)` the first `j − 1` entries (Ritz values in
/// descending order) replace `λ_1, …, λ_{j−1}` in `K_j`.
pub fn kps_ingredients(
    spectrum: &Spectrum,
    overlaps: &OverlapProfile,
    j: usize,
    ritz_prefix: Option<&[f64]>,
) -> Result<KpsIngredients> {
    overlaps.check_len(spectrum)?;
    let n = spectrum.len();
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, len: n });
    }
    let values = spectrum.values();
    if j < n && values[j - 1] == values[j] {
        return Err(Error::DegenerateGap { j });
    }
    let levels = Levels {
        values: values.to_vec(),
        weights: (0..n).map(|k| overlaps.weight(k)).collect(),
    };
    levels.ingredients(j - 1, ritz_prefix.map(|t| &t[..t.len().min(j - 1)]))
}

/// `λ_j − θ_j ≤` this value for the Krylov space of dimension `n`.
pub fn kps_bound(ing: &KpsIngredients, n: usize, form: BoundForm) -> Result<f64> {
    log_bound(ing, n, form).map(clamp_exp)
}

/// The same bound for the `j_from_bottom`-th smallest eigenvalue, obtained
/// from `−A`. Bounds `θ − λ`.
///
/// A Ritz prefix, if given, holds the smallest Ritz values of `A` in
/// ascending order.
pub fn kps_bound_lower_end(
    spectrum: &Spectrum,
    overlaps: &OverlapProfile,
    j_from_bottom: usize,
    n: usize,
    form: BoundForm,
    ritz_prefix: Option<&[f64]>,
) -> Result<f64> {
    let negated_prefix: Option<Vec<f64>> = ritz_prefix.map(|t| t.iter().map(|x| -x).collect());
    let ing = kps_ingredients(
        &spectrum.negated(),
        &overlaps.reversed(),
        j_from_bottom,
        negated_prefix.as_deref(),
    )?;
    kps_bound(&ing, n, form)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(v: &[f64]) -> Spectrum {
        Spectrum::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hand_evaluated_ingredients() {
        let s = spec(&[3.0, 2.0, 1.0, 0.0]);
        let ing = kps_ingredients(&s, &OverlapProfile::equal(4), 1, None).unwrap();
        assert!((ing.tan_angle.powi(2) - 3.0).abs() < 1e-14);
        assert_eq!(ing.k_factor, 1.0);
        assert!((ing.mu - 0.5_f64.sqrt()).abs() < 1e-15);
        assert!((ing.gamma_at_lambda_j - 2.0).abs() < 1e-15);
        assert_eq!(ing.span, 3.0);

        let ing = kps_ingredients(&s, &OverlapProfile::equal(4), 2, None).unwrap();
        assert_eq!(ing.k_factor, 3.0);

        let e1 = OverlapProfile::new(vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(kps_ingredients(&s, &e1, 1, None).unwrap().tan_angle, 0.0);
    }

    #[test]
    fn hand_evaluated_bounds() {
        let s = spec(&[3.0, 2.0, 1.0, 0.0]);
        let ing = kps_ingredients(&s, &OverlapProfile::equal(4), 1, None).unwrap();
        assert!((kps_bound(&ing, 2, BoundForm::Exact).unwrap() - 2.25).abs() < 1e-13);
        assert!((kps_bound(&ing, 1, BoundForm::Exact).unwrap() - 9.0).abs() < 1e-13);
        // 4·3·3·e^{-4/√2}
        let asym = 36.0 * (-4.0 * 0.5_f64.sqrt()).exp();
        assert!((kps_bound(&ing, 2, BoundForm::Asymptotic).unwrap() - asym).abs() < 1e-13);
        assert!(matches!(
            kps_bound(&ing, 0, BoundForm::Exact),
            Err(Error::DimensionBelowIndex { n: 0, j: 1 })
        ));

        let e1 = OverlapProfile::new(vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        let ing = kps_ingredients(&s, &e1, 1, None).unwrap();
        for n in 1..5 {
            assert_eq!(kps_bound(&ing, n, BoundForm::Exact).unwrap(), 0.0);
        }
    }

    #[test]
    fn ingredient_errors() {
        let s = spec(&[3.0, 2.0, 1.0, 0.0]);
        let eq = OverlapProfile::equal(4);
        assert_eq!(
            kps_ingredients(&s, &eq, 4, None),
            Err(Error::NoGapBelow { j: 4 })
        );
        assert_eq!(
            kps_ingredients(&s, &eq, 3, None),
            Err(Error::DegenerateTail { j: 3 })
        );
        assert!(kps_ingredients(&s, &eq, 0, None).is_err());
        assert_eq!(
            kps_ingredients(&spec(&[2.0, 2.0, 0.0]), &OverlapProfile::equal(3), 1, None),
            Err(Error::DegenerateGap { j: 1 })
        );
        let z = OverlapProfile::new(vec![0.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(
            kps_ingredients(&s, &z, 1, None),
            Err(Error::ZeroOverlap { index: 1 })
        );
        assert_eq!(
            kps_ingredients(&s, &eq, 2, Some(&[])),
            Err(Error::ShortRitzPrefix {
                needed: 1,
                found: 0
            })
        );
    }

    #[test]
    fn a_posteriori_reduces_to_product_above_target() {
        let s = spec(&[3.0, 2.0, 1.0, 0.0]);
        let ing = kps_ingredients(&s, &OverlapProfile::equal(4), 2, Some(&[2.9])).unwrap();
        assert!((ing.k_factor - 2.9 / 0.9).abs() < 1e-14);
        assert_eq!(ing.k_mode, KMode::APosteriori);
    }

    #[test]
    fn lower_end_by_negation() {
        let s = spec(&[3.0, 2.0, 1.0, 0.0]);
        let neg = spec(&[0.0, -1.0, -2.0, -3.0]);
        let eq = OverlapProfile::equal(4);
        let ing = kps_ingredients(&neg, &eq, 1, None).unwrap();
        assert!((ing.mu - 0.5_f64.sqrt()).abs() < 1e-15);
        for n in 1..5 {
            let lower = kps_bound_lower_end(&s, &eq, 1, n, BoundForm::Exact, None).unwrap();
            assert_eq!(lower, kps_bound(&ing, n, BoundForm::Exact).unwrap());
        }

        let sym = spec(&[1.0, 0.5, -0.5, -1.0]);
        for n in 1..5 {
            let top = kps_bound(
                &kps_ingredients(&sym, &eq, 1, None).unwrap(),
                n,
                BoundForm::Exact,
            )
            .unwrap();
            let bottom = kps_bound_lower_end(&sym, &eq, 1, n, BoundForm::Exact, None).unwrap();
            assert_eq!(top, bottom);
        }

        let en = OverlapProfile::new(vec![0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(
            kps_bound_lower_end(&s, &en, 1, 2, BoundForm::Exact, None).unwrap(),
            0.0
        );
    }
}
