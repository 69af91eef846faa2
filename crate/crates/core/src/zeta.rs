//! Zeta functions `ζ_X(t) = Σ χ̃(Sym^n X) t^n` and the identities they satisfy.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{euler, euler_from_homology, format_homology, reduced_homology};
use crate::series::{binomial_neg, series_inv, series_mul, Series};
use crate::sset::{quotient_by_subobject, suspend, sym_power, Inclusion, PointedSimplicialSet};

#[derive(Clone, Debug, Serialize)]
pub struct ZetaTerm {
    pub n: usize,
    /// `χ̃` from counts of non-degenerate simplices.
    pub euler_counts: i64,
    /// `χ̃` from reduced homology ranks.
    pub euler_homology: i64,
    pub homology: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaReport {
    pub series: Series,
    pub terms: Vec<ZetaTerm>,
    /// Smallest dimension bound that certifies every `Sym^n X` used.
    pub dim_bound_needed: usize,
}

/// Dimension bound needed to compute `χ̃(Sym^n X)` for all `n <= order`.
pub fn zeta_bound(x: &PointedSimplicialSet, order: usize) -> Option<usize> {
    x.geometric_dim().map(|d| d * order)
}

/// `ζ_X(t)` to order `N`, each coefficient computed twice.
pub fn zeta(x: &PointedSimplicialSet, order: usize) -> Result<ZetaReport> {
    let needed = zeta_bound(x, order).ok_or(Error::Truncation {
        needed: x.dim_bound() + 1,
        have: x.dim_bound(),
    })?;
    if needed > x.dim_bound() {
        return Err(Error::Truncation {
            needed,
            have: x.dim_bound(),
        });
    }
    let mut coeffs = vec![1i64];
    let mut terms = Vec::new();
    for n in 1..=order {
        let s = sym_power(n, x);
        let euler_counts = euler(&s)?;
        let h = reduced_homology(&s)?;
        let euler_homology = euler_from_homology(&h);
        if euler_counts != euler_homology {
            return Err(Error::Mismatch(format!(
                "χ̃(Sym^{n}) is {euler_counts} from simplex counts but {euler_homology} from homology"
            )));
        }
        coeffs.push(euler_counts);
        terms.push(ZetaTerm {
            n,
            euler_counts,
            euler_homology,
            homology: format_homology(&h),
        });
    }
    Ok(ZetaReport {
        series: Series::from_i64(&coeffs),
        terms,
        dim_bound_needed: needed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MacdonaldReport {
    pub euler: i64,
    pub zeta: ZetaReport,
    pub closed_form: Series,
    pub first_divergence: Option<usize>,
    pub passed: bool,
}

/// `ζ_X(t) = (1 - t)^{-χ̃(X)}`.
pub fn macdonald_check(x: &PointedSimplicialSet, order: usize) -> Result<MacdonaldReport> {
    let e = euler(x)?;
    let zeta = zeta(x, order)?;
    let closed_form = binomial_neg(e, order);
    let first_divergence = zeta.series.first_difference(&closed_form);
    Ok(MacdonaldReport {
        euler: e,
        zeta,
        closed_form,
        first_divergence,
        passed: first_divergence.is_none(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicativityReport {
    pub zeta_x: ZetaReport,
    pub zeta_y: ZetaReport,
    pub zeta_z: ZetaReport,
    pub product: Series,
    pub first_divergence: Option<usize>,
    pub passed: bool,
}

/// `ζ_Y = ζ_X · ζ_Z` for `X ↪ Y` with cofiber `Z = Y/X`.
pub fn multiplicativity_check(j: &Inclusion, order: usize) -> Result<MultiplicativityReport> {
    let (z, _) = quotient_by_subobject(j);
    let zeta_x = zeta(j.source(), order)?;
    let zeta_y = zeta(j.target(), order)?;
    let zeta_z = zeta(&z, order)?;
    let product = series_mul(&zeta_x.series, &zeta_z.series)?;
    let first_divergence = zeta_y.series.first_difference(&product);
    Ok(MultiplicativityReport {
        zeta_x,
        zeta_y,
        zeta_z,
        product,
        first_divergence,
        passed: first_divergence.is_none(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SuspensionReport {
    pub zeta_x: ZetaReport,
    pub zeta_suspension: ZetaReport,
    pub product: Series,
    pub inverse: Series,
    pub passed: bool,
}

/// `ζ_{ΣX} · ζ_X = 1`.
pub fn suspension_inverse_check(x: &PointedSimplicialSet, order: usize) -> Result<SuspensionReport> {
    let zeta_x = zeta(x, order)?;
    let zeta_suspension = zeta(&suspend(x), order)?;
    let product = series_mul(&zeta_suspension.series, &zeta_x.series)?;
    let inverse = series_inv(&zeta_x.series)?;
    Ok(SuspensionReport {
        passed: product == Series::one(order) && inverse == zeta_suspension.series,
        zeta_x,
        zeta_suspension,
        product,
        inverse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{point, sphere, wedge};

    #[test]
    fn small_zetas() {
        assert_eq!(zeta(&point(3), 3).unwrap().series, Series::from_i64(&[1, 0, 0, 0]));
        assert_eq!(zeta(&sphere(0, 0).unwrap(), 4).unwrap().series, Series::from_i64(&[1, 1, 1, 1, 1]));
        let z = zeta(&sphere(1, 4).unwrap(), 4).unwrap();
        assert_eq!(z.series, Series::from_i64(&[1, -1, 0, 0, 0]));
        assert_eq!(z.terms[1].homology, "H̃_* = 0");
    }

    #[test]
    fn truncation_is_reported() {
        let s = sphere(1, 2).unwrap();
        match zeta(&s, 3) {
            Err(Error::Truncation { needed, have }) => assert_eq!((needed, have), (3, 2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn macdonald_small() {
        let w = wedge(&sphere(1, 3).unwrap(), &sphere(1, 3).unwrap());
        let r = macdonald_check(&w, 3).unwrap();
        assert_eq!(r.zeta.series, Series::from_i64(&[1, -2, 1, 0]));
        assert!(r.passed);
        assert!(macdonald_check(&point(0), 2).unwrap().passed);
    }

    #[test]
    fn multiplicativity_trivial_cases() {
        let s = sphere(1, 3).unwrap();
        assert!(multiplicativity_check(&Inclusion::identity(&s), 3).unwrap().passed);
        assert!(multiplicativity_check(&Inclusion::basepoint(&s), 3).unwrap().passed);
    }

    #[test]
    fn suspension_of_points() {
        assert!(suspension_inverse_check(&point(3), 3).unwrap().passed);
        let r = suspension_inverse_check(&sphere(0, 3).unwrap(), 3).unwrap();
        assert_eq!(r.zeta_suspension.series, Series::from_i64(&[1, -1, 0, 0]));
        assert!(r.passed);
    }
}
