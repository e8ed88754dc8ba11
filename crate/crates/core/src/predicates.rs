//! Trace predicates on the matrices parametrising `H(F)`, and the
//! isomorphism test for generic parameters.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::similarity::similar;

fn traces(f: &ExactMatrix) -> Result<(crate::Scalar, crate::Scalar)> {
    let inv = f.inverse()?;
    Ok((f.trace()?, inv.trace()?))
}

/// `tr(F) = tr(F⁻¹)`.
pub fn is_normalized(f: &ExactMatrix) -> Result<bool> {
    let (t, ti) = traces(f)?;
    Ok(t == ti)
}

/// Some nonzero multiple of `F` is normalized (over an algebraic closure).
///
/// `tr(λF) = λ tr(F)` and `tr((λF)⁻¹) = λ⁻¹ tr(F⁻¹)`, so a suitable `λ`
/// exists unless exactly one of the two traces vanishes.
pub fn is_normalizable(f: &ExactMatrix) -> Result<bool> {
    let (t, ti) = traces(f)?;
    Ok(t.is_zero() == ti.is_zero())
}

/// Normalized, and the roots of `q² - tr(F) q + 1` are not roots of unity of
/// order at least 3.
///
/// With a rational trace `t`, a root of unity `q` of order `N ≥ 3` has
/// `t = q + q⁻¹ = 2cos(2πk/N)` rational, which forces `t ∈ {-1, 0, 1}`.
/// `t = ±2` gives `q = ±1`, which is allowed.
pub fn is_generic(f: &ExactMatrix) -> Result<bool> {
    let (t, ti) = traces(f)?;
    let t = t.as_rational().ok_or_else(|| Error::NotRational("genericity is decided for rational traces".into()))?;
    if ti.as_rational() != Some(t) {
        return Ok(false);
    }
    Ok(!(t.is_zero() || t.abs().is_one()))
}

fn require_generic(f: &ExactMatrix, which: &'static str) -> Result<()> {
    let (t, ti) = traces(f)?;
    if t != ti {
        return Err(Error::NotGeneric { which, reason: format!("not normalized: tr = {t}, tr of inverse = {ti}") });
    }
    if !is_generic(f)? {
        return Err(Error::NotGeneric {
            which,
            reason: format!("tr = {t}, so the roots of q^2 - ({t})q + 1 are roots of unity of order >= 3"),
        });
    }
    Ok(())
}

/// Which of the four similarity conditions relates the two parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IsoCondition {
    /// `F = PEP⁻¹`
    Conjugate,
    /// `F = -PEP⁻¹`
    NegConjugate,
    /// `ᵗF⁻¹ = PEP⁻¹`
    TransposeInverseConjugate,
    /// `ᵗF⁻¹ = -PEP⁻¹`
    NegTransposeInverseConjugate,
}

impl IsoCondition {
    pub fn describe(self) -> &'static str {
        match self {
            IsoCondition::Conjugate => "condition i: F = P E P^-1",
            IsoCondition::NegConjugate => "condition i: F = -P E P^-1",
            IsoCondition::TransposeInverseConjugate => "condition ii: tF^-1 = P E P^-1",
            IsoCondition::NegTransposeInverseConjugate => "condition ii: tF^-1 = -P E P^-1",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum IsoVerdict {
    Isomorphic { condition: IsoCondition },
    NotIsomorphic { reason: String },
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic { .. })
    }
}

/// Decides whether `H(E) ≅ H(F)` as Hopf algebras for generic `E`, `F`.
pub fn hopf_isomorphic(e: &ExactMatrix, f: &ExactMatrix) -> Result<IsoVerdict> {
    require_generic(e, "E")?;
    require_generic(f, "F")?;
    if e.rows() != f.rows() {
        return Ok(IsoVerdict::NotIsomorphic { reason: format!("sizes differ ({} vs {})", e.rows(), f.rows()) });
    }
    let neg_e = e.neg();
    let ft_inv = f.inverse()?.transpose();
    let checks = [
        (f, e, IsoCondition::Conjugate),
        (f, &neg_e, IsoCondition::NegConjugate),
        (&ft_inv, e, IsoCondition::TransposeInverseConjugate),
        (&ft_inv, &neg_e, IsoCondition::NegTransposeInverseConjugate),
    ];
    for (a, b, condition) in checks {
        if similar(a, b)? {
            return Ok(IsoVerdict::Isomorphic { condition });
        }
    }
    Ok(IsoVerdict::NotIsomorphic { reason: "none of the four similarity conditions holds".into() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    fn diag(xs: &[(i64, i64)]) -> ExactMatrix {
        ExactMatrix::diagonal(xs.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect())
    }

    #[test]
    fn normalized_examples() {
        assert!(is_normalized(&ExactMatrix::f_q(&Scalar::q()).unwrap()).unwrap());
        assert!(!is_normalized(&diag(&[(1, 1), (2, 1)])).unwrap());
        // F = tF^-1 (orthogonal)
        let rot = ExactMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert_eq!(rot, rot.inverse().unwrap().transpose());
        assert!(is_normalized(&rot).unwrap());
    }

    #[test]
    fn normalizable_examples() {
        // tr = 0, tr^-1 = 0
        let both_zero = ExactMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(is_normalizable(&both_zero).unwrap());
        // tr = 0, tr^-1 = -1
        let m = diag(&[(3, 1), (-3, 2), (-3, 2)]);
        assert_eq!(m.trace().unwrap(), Scalar::zero());
        assert_eq!(m.inverse().unwrap().trace().unwrap(), Scalar::int(-1));
        assert!(!is_normalizable(&m).unwrap());
        assert!(is_normalizable(&ExactMatrix::f_q(&Scalar::q()).unwrap()).unwrap());
        assert!(is_normalizable(&diag(&[(1, 1), (2, 1)])).unwrap());
    }

    #[test]
    fn generic_examples() {
        // det 1 and trace t, so tr(F) = tr(F^-1) = t
        let t3 = ExactMatrix::from_i64(&[&[3, -1], &[1, 0]]);
        assert!(is_normalized(&t3).unwrap());
        assert!(is_generic(&t3).unwrap());
        let t1 = ExactMatrix::from_i64(&[&[1, -1], &[1, 0]]);
        assert!(!is_generic(&t1).unwrap());
        let t0 = ExactMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(!is_generic(&t0).unwrap());
        assert!(is_generic(&ExactMatrix::identity(2).neg()).unwrap());
    }

    #[test]
    fn singular_rejected() {
        let s = ExactMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(is_normalized(&s), Err(Error::Singular));
        assert_eq!(is_generic(&s), Err(Error::Singular));
    }

    #[test]
    fn iso_requires_generic() {
        let t1 = ExactMatrix::from_i64(&[&[1, -1], &[1, 0]]);
        let t3 = ExactMatrix::from_i64(&[&[3, -1], &[1, 0]]);
        assert!(matches!(hopf_isomorphic(&t1, &t3), Err(Error::NotGeneric { which: "E", .. })));
        assert!(matches!(hopf_isomorphic(&t3, &t1), Err(Error::NotGeneric { which: "F", .. })));
    }

    #[test]
    fn iso_conditions() {
        let e = ExactMatrix::from_i64(&[&[3, -1], &[1, 0]]);
        let p = ExactMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let conj = &(&p * &e) * &p.inverse().unwrap();
        assert_eq!(hopf_isomorphic(&e, &conj).unwrap(), IsoVerdict::Isomorphic { condition: IsoCondition::Conjugate });
        assert!(hopf_isomorphic(&e, &e.neg()).unwrap().is_isomorphic());
    }
}
