use hfusion_core::poly::Poly;
use hfusion_core::predicates::{hopf_isomorphic, is_generic, is_normalizable, is_normalized};
use hfusion_core::scalar::RatFunc;
use hfusion_core::similarity::{rational_canonical_form, similar};
use hfusion_core::{ExactMatrix, Scalar};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn ratfunc() -> impl Strategy<Value = Scalar> {
    (prop::collection::vec(-4i64..=4, 0..4), prop::collection::vec(-3i64..=3, 1..3))
        .prop_filter_map("zero denominator", |(n, d)| {
            RatFunc::new(Poly::from_i64s(&n), Poly::from_i64s(&d)).map(Scalar::from_ratfunc)
        })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![small_rational(), ratfunc()]
}

fn int_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
        let rows: Vec<Vec<Scalar>> = v.chunks(n).map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect();
        ExactMatrix::from_rows(rows).unwrap()
    })
}

fn invertible(n: usize) -> impl Strategy<Value = ExactMatrix> {
    int_matrix(n).prop_filter("singular", |m| !m.determinant().unwrap().is_zero())
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if let Some(ai) = a.inv() {
            prop_assert!((&a * &ai).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn scalar_display_parses_back(a in scalar()) {
        prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn inverse_involution(m in invertible(3)) {
        let mi = m.inverse().unwrap();
        prop_assert_eq!(mi.inverse().unwrap(), m.clone());
        prop_assert_eq!(m.checked_mul(&mi).unwrap(), ExactMatrix::identity(3));
    }

    #[test]
    fn determinant_multiplicative(a in int_matrix(3), b in int_matrix(3)) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), &a.determinant().unwrap() * &b.determinant().unwrap());
    }

    #[test]
    fn similarity_equivalence(a in int_matrix(3), p in invertible(3), r in invertible(3)) {
        let b = p.checked_mul(&a).unwrap().checked_mul(&p.inverse().unwrap()).unwrap();
        let c = r.checked_mul(&b).unwrap().checked_mul(&r.inverse().unwrap()).unwrap();
        prop_assert!(similar(&a, &a).unwrap());
        prop_assert!(similar(&a, &b).unwrap() && similar(&b, &a).unwrap());
        prop_assert!(similar(&a, &c).unwrap());
        prop_assert_eq!(rational_canonical_form(&a).unwrap(), rational_canonical_form(&c).unwrap());
    }

    #[test]
    fn similarity_respects_trace_and_det(a in int_matrix(3), b in int_matrix(3)) {
        if similar(&a, &b).unwrap() {
            prop_assert_eq!(a.trace().unwrap(), b.trace().unwrap());
            prop_assert_eq!(a.determinant().unwrap(), b.determinant().unwrap());
        }
    }

    #[test]
    fn normalizable_iff_traces_agree_on_zero(m in invertible(3)) {
        let (t, ti) = (m.trace().unwrap(), m.inverse().unwrap().trace().unwrap());
        prop_assert_eq!(is_normalizable(&m).unwrap(), t.is_zero() == ti.is_zero());
        prop_assert_eq!(is_normalized(&m).unwrap(), t == ti);
    }

    #[test]
    fn sl2_blocks_are_normalized(a in -5i64..=5, b in -5i64..=5, c in -5i64..=5) {
        // [[a, b], [c, d]] with ad - bc = 1 when a divides 1 + bc
        prop_assume!(a != 0 && (1 + b * c) % a == 0);
        let d = (1 + b * c) / a;
        let m = ExactMatrix::from_i64(&[&[a, b], &[c, d]]);
        prop_assert!(is_normalized(&m).unwrap());
        let t = a + d;
        prop_assert_eq!(is_generic(&m).unwrap(), !(-1..=1).contains(&t));
        if is_generic(&m).unwrap() {
            prop_assert!(hopf_isomorphic(&m, &m.inverse().unwrap().transpose()).unwrap().is_isomorphic());
        }
    }
}
