use std::collections::BTreeSet;

use hfusion_core::diamond::{AmbiguityKind, NCPoly, RewriteSystem};
use hfusion_core::presentations::*;

mod common;
use common::expected_hef_census;
use hfusion_core::{ExactMatrix, Scalar};

fn m(rows: &[&[i64]]) -> ExactMatrix {
    ExactMatrix::from_i64(rows)
}

fn rat(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

fn census(sys: &RewriteSystem) -> Vec<(AmbiguityKind, String)> {
    sys.ambiguities().iter().map(|a| (a.kind, a.witness.display(sys.alphabet()).to_string())).collect()
}

#[test]
fn hef_two_by_two_census_and_confluence() {
    let h = build_hef(&m(&[&[1, 0], &[0, 2]]), &m(&[&[1, 0], &[1, 2]]), true).unwrap();
    let got = census(&h.system);
    assert_eq!(got.len(), 18);
    let set: BTreeSet<_> = got.into_iter().collect();
    assert_eq!(set, expected_hef_census(2, 2));
    let rep = h.system.confluence_report();
    assert_eq!((rep.inclusions, rep.overlaps), (2, 16));
    assert!(rep.confluent, "{}", rep.to_text());
}

#[test]
fn hef_three_by_two_confluent() {
    let e = ExactMatrix::diagonal(vec![Scalar::int(-3), Scalar::int(5), Scalar::int(8)]);
    let f = m(&[&[40, 0], &[1, -30]]);
    assert!(trace_conditions(&e, &f).unwrap());
    let h = build_hef(&e, &f, true).unwrap();
    assert_eq!(h.rules().len(), 2 * (9 + 4));
    let got = census(&h.system);
    assert_eq!(got.len(), 2 + 4 * 6);
    assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), expected_hef_census(3, 2));
    assert!(h.system.is_confluent());
}

#[test]
fn hef_rational_entries_confluent() {
    let e = ExactMatrix::diagonal(vec![rat(-2, 1), rat(-3, 2), rat(-2, 3)]);
    let f = ExactMatrix::from_rows(vec![vec![rat(-5, 12), Scalar::zero()], vec![rat(7, 3), rat(-15, 4)]]).unwrap();
    assert!(build_hef(&e, &f, true).unwrap().system.is_confluent());
}

fn inclusion_residuals(e: &ExactMatrix, f: &ExactMatrix) -> Vec<(String, NCPoly)> {
    let h = build_hef(e, f, false).unwrap();
    h.system
        .ambiguities()
        .iter()
        .filter(|a| a.kind == AmbiguityKind::Inclusion)
        .map(|a| (a.witness.display(h.alphabet()).to_string(), a.residual(&h.system)))
        .collect()
}

#[test]
fn trace_mismatch_breaks_matching_inclusion() {
    let f = m(&[&[1, 0], &[1, 2]]);
    // tr E = tr F, tr E^-1 != tr F^-1
    let e1 = ExactMatrix::diagonal(vec![rat(1, 2), rat(5, 2)]);
    // tr E != tr F, tr E^-1 = tr F^-1
    let e2 = ExactMatrix::diagonal(vec![rat(4, 1), rat(4, 5)]);
    for e in [&e1, &e2] {
        let (te, tf) = (e.trace().unwrap(), f.trace().unwrap());
        let (tei, tfi) = (e.inverse().unwrap().trace().unwrap(), f.inverse().unwrap().trace().unwrap());
        let f11_inv = f.get(0, 0).inv().unwrap();
        let emm = e.get(1, 1).clone();
        let res = inclusion_residuals(e, &f);
        assert_eq!(res.len(), 2);
        for (w, r) in res {
            let expect = match w.as_str() {
                "v11.u11" => &f11_inv * &(&te - &tf),
                "u22.v22" => &emm * &(&tei - &tfi),
                other => panic!("unexpected inclusion {other}"),
            };
            assert_eq!(r, NCPoly::constant(expect), "{w}");
        }
        assert!(!build_hef(e, &f, false).unwrap().system.is_confluent());
    }
}

#[test]
fn hq_and_hplusq() {
    let q = Scalar::q();
    let hq = build_hq(&q).unwrap();
    assert_eq!(hq.rules().len(), 16);
    assert!(hq.system.is_confluent());
    let hp = build_hplusq(&q).unwrap();
    assert_eq!(hp.rules().len(), 26);
    assert_eq!(&hp.rules()[..16], hq.rules());
    let rep = hp.system.confluence_report();
    assert!(rep.confluent, "{}", rep.to_text());
    assert_eq!(rep.inclusions, 2);
    assert_eq!(rep.records.len(), 18 + 24 + 2);
    assert!(rep.records.iter().any(|r| r.witness == "t.t_inv.alpha"));
    assert!(rep.records.iter().any(|r| r.witness == "t.t_inv.t"));
    assert!(rep.records.iter().any(|r| r.witness == "t_inv.t.t_inv"));

    let a = hp.alphabet();
    let tta = NCPoly::monomial(a.parse_monomial("t.t_inv.alpha").unwrap());
    assert_eq!(hp.system.reduce(&tta), NCPoly::monomial(a.parse_monomial("alpha").unwrap()));
}

#[test]
fn hq_classical_and_numeric() {
    for q in [Scalar::one(), rat(3, 2), Scalar::int(-1)] {
        assert!(build_hq(&q).unwrap().system.is_confluent());
        assert!(build_hplusq(&q).unwrap().system.is_confluent());
    }
}

#[test]
fn hq_reduced_words_stay_reduced() {
    let q = Scalar::q();
    let (hq, hp) = (build_hq(&q).unwrap(), build_hplusq(&q).unwrap());
    let words = hq.system.reduced_monomials(4).unwrap();
    assert!(words.iter().all(|w| hp.system.is_reduced(w)));
}

#[test]
fn slq2_and_free_product() {
    let q = Scalar::q();
    let s = build_slq2(&q).unwrap();
    assert_eq!(s.alphabet().render_order(), "b < c < a < d");
    assert!(s.system.confluence_report().confluent);
    let two = s.system.reduced_monomials(2).unwrap().into_iter().filter(|w| w.len() == 2).count();
    assert_eq!(two, 16 - 7);

    let fp = build_freeprod(&q).unwrap();
    let rep = fp.system.confluence_report();
    assert!(rep.confluent);
    let slq2_count = s.system.ambiguities().len();
    assert_eq!(rep.records.len(), slq2_count + 2);
    let a = fp.alphabet();
    let p = NCPoly::monomial(a.parse_monomial("z.z_inv.a").unwrap());
    assert_eq!(fp.system.reduce(&p), NCPoly::monomial(a.parse_monomial("a").unwrap()));
    assert!(build_slq2(&Scalar::zero()).is_err());
    assert!(build_freeprod(&Scalar::zero()).is_err());
}

#[test]
fn pi_is_well_defined() {
    for q in [Scalar::q(), rat(3, 2)] {
        let rep = verify_pi(&q).unwrap();
        assert_eq!(rep.checks.len(), 16);
        assert!(rep.well_defined, "{rep:?}");
    }
}

#[test]
fn pi_single_relation_by_hand() {
    // beta.beta* + alpha.alpha* - 1 maps to -q^-1 z.b.c.z_inv + z.a.d.z_inv - 1
    let q = Scalar::q();
    let fp = build_freeprod(&q).unwrap();
    let a = fp.alphabet();
    let qi = q.inv().unwrap();
    let img = NCPoly::from_terms([
        (-&qi, a.parse_monomial("z.b.c.z_inv").unwrap()),
        (Scalar::one(), a.parse_monomial("z.a.d.z_inv").unwrap()),
        (-Scalar::one(), a.parse_monomial("1").unwrap()),
    ]);
    assert!(fp.system.reduce(&img).is_zero());
}

#[test]
fn corrupted_pi_fails() {
    let q = Scalar::q();
    let hq = build_hq(&q).unwrap();
    let fp = build_freeprod(&q).unwrap();
    let mut images = pi_images(&hq, &fp, &q).unwrap();
    let beta = hq.alphabet().id("beta").unwrap() as usize;
    images[beta] = NCPoly::monomial(fp.alphabet().parse_monomial("z.c").unwrap());
    let rep = check_morphism(&hq.system, &fp.system, &images).unwrap();
    assert!(!rep.well_defined);
    assert!(rep.checks.iter().any(|c| !c.holds && c.relation.starts_with("beta.")));
}

#[test]
fn free_family_examples() {
    let h = build_hef(&m(&[&[1, 0], &[0, 2]]), &m(&[&[1, 0], &[1, 2]]), true).unwrap();
    let us = h.alphabet().ids(&["u11", "u12", "u21", "u22"]).unwrap();
    let rep = h.system.is_free_family(&us, 4).unwrap();
    assert!(rep.is_free());
    assert_eq!(rep.checked, 1 + 4 + 16 + 64 + 256);
    let mixed = h.alphabet().ids(&["u11", "v11"]).unwrap();
    assert_eq!(h.system.is_free_family(&mixed, 2).unwrap().counterexample.as_deref(), Some("v11.u11"));
    assert!(h.system.is_free_family(&[], 4).unwrap().is_free());

    let bad = build_hef(&m(&[&[1, 0], &[0, 3]]), &m(&[&[1, 0], &[1, 2]]), false).unwrap();
    assert!(bad.system.is_free_family(&us, 2).is_err());
}

#[test]
fn aaut_trace_family_uses_inverse() {
    let q = Scalar::q();
    let r = build_aaut(&ExactMatrix::f_q(&q).unwrap()).unwrap();
    let t = r.families[3][0].display(&r.alphabet).to_string();
    assert_eq!(t, "[q^-1] X22_11 + [q] X11_11 - [q]");
    assert!(build_aaut(&m(&[&[1, 2], &[2, 4]])).is_err());
}
