//! Concrete presentations as rewrite systems.

use serde::Serialize;

use crate::diamond::{write_presentation, Alphabet, Monomial, NCPoly, RewriteSystem, Rule};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PresentationKind {
    Hef,
    Hq,
    HPlusQ,
    SlQ2,
    FreeProd,
}

impl PresentationKind {
    pub fn label(self) -> &'static str {
        match self {
            PresentationKind::Hef => "HEF",
            PresentationKind::Hq => "HQ",
            PresentationKind::HPlusQ => "HPLUSQ",
            PresentationKind::SlQ2 => "SLQ2",
            PresentationKind::FreeProd => "FREEPROD",
        }
    }
}

/// A named rewrite system together with the parameters it was built from.
#[derive(Clone, Debug)]
pub struct PresentationSpec {
    pub kind: PresentationKind,
    pub e: Option<ExactMatrix>,
    pub f: Option<ExactMatrix>,
    pub q: Option<Scalar>,
    pub system: RewriteSystem,
}

impl PresentationSpec {
    pub fn alphabet(&self) -> &Alphabet {
        self.system.alphabet()
    }

    pub fn rules(&self) -> &[Rule] {
        self.system.rules()
    }

    /// The presentation in the diamond file format.
    pub fn to_file_string(&self) -> String {
        write_presentation(Some(self.kind.label()), &self.system)
    }

    pub fn generator(&self, name: &str) -> Result<Monomial> {
        self.alphabet().monomial(&[name])
    }
}

/// `tr E = tr F` and `tr E⁻¹ = tr F⁻¹`.
pub fn trace_conditions(e: &ExactMatrix, f: &ExactMatrix) -> Result<bool> {
    let (ei, fi) = (e.inverse()?, f.inverse()?);
    Ok(e.trace()? == f.trace()? && ei.trace()? == fi.trace()?)
}

/// Generator names for the `u` and `v` matrices of `H(E,F)`.
#[derive(Clone, Debug)]
struct HefNames {
    u: Vec<Vec<String>>,
    v: Vec<Vec<String>>,
}

impl HefNames {
    fn indexed(m: usize, n: usize) -> Self {
        let wide = m > 9 || n > 9;
        let name = |p: &str, i: usize, j: usize| {
            if wide {
                format!("{p}{i}_{j}")
            } else {
                format!("{p}{i}{j}")
            }
        };
        HefNames {
            u: (1..=m).map(|i| (1..=n).map(|j| name("u", i, j)).collect()).collect(),
            v: (1..=m).map(|i| (1..=n).map(|j| name("v", i, j)).collect()).collect(),
        }
    }

    fn greek() -> Self {
        let s = |a: &[&str]| a.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        HefNames {
            u: vec![s(&["alpha", "beta"]), s(&["gamma", "delta"])],
            v: vec![s(&["alpha*", "beta*"]), s(&["gamma*", "delta*"])],
        }
    }

    /// v's in reverse lexicographic index order, then u's in lexicographic order.
    fn ordered(&self) -> Vec<String> {
        let mut out: Vec<String> = self.v.iter().flatten().rev().cloned().collect();
        out.extend(self.u.iter().flatten().cloned());
        out
    }
}

/// Checks the freeness hypotheses on `(E, F)`: sizes at least 2, `E`
/// diagonal, `F` lower-triangular, matching traces of the matrices and of
/// their inverses.
pub fn hef_hypotheses(e: &ExactMatrix, f: &ExactMatrix) -> Result<()> {
    let fail = |s: String| Err(Error::Hypothesis(s));
    if !e.is_square() {
        return Err(Error::NotSquare { rows: e.rows(), cols: e.cols() });
    }
    if !f.is_square() {
        return Err(Error::NotSquare { rows: f.rows(), cols: f.cols() });
    }
    if e.rows() < 2 || f.rows() < 2 {
        return fail(format!("sizes must be at least 2 (got m = {}, n = {})", e.rows(), f.rows()));
    }
    if !e.is_diagonal() {
        return fail("E must be diagonal".into());
    }
    if !f.is_lower_triangular() {
        return fail("F must be lower-triangular".into());
    }
    let (ei, fi) = (e.inverse()?, f.inverse()?);
    let (te, tf) = (e.trace()?, f.trace()?);
    if te != tf {
        return fail(format!("tr(E) = {te} differs from tr(F) = {tf}"));
    }
    let (tei, tfi) = (ei.trace()?, fi.trace()?);
    if tei != tfi {
        return fail(format!("tr(E^-1) = {tei} differs from tr(F^-1) = {tfi}"));
    }
    Ok(())
}

fn delta(i: usize, j: usize) -> Scalar {
    if i == j {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

fn hef_system(e: &ExactMatrix, f: &ExactMatrix, names: &HefNames) -> Result<RewriteSystem> {
    let (m, n) = (e.rows(), f.rows());
    if !e.is_square() || !f.is_square() {
        return Err(Error::DimensionMismatch("E and F must be square".into()));
    }
    if m == 0 || n == 0 {
        return Err(Error::DimensionMismatch("E and F must be nonempty".into()));
    }
    let fi = f.inverse()?;
    let f11_inv = f.get(0, 0).inv().ok_or_else(|| Error::Hypothesis("F_11 must be nonzero".into()))?;
    let e_diag_inv: Vec<Scalar> = (0..m)
        .map(|k| e.get(k, k).inv().ok_or_else(|| Error::Hypothesis(format!("E_{0}{0} must be nonzero", k + 1))))
        .collect::<Result<_>>()?;
    let alphabet = Alphabet::new(names.ordered())?;
    let g = |name: &str| alphabet.id(name).expect("generator exists");
    let u = |i: usize, j: usize| g(&names.u[i][j]);
    let v = |i: usize, j: usize| g(&names.v[i][j]);
    let mono = |a: u32, b: u32| Monomial::new(vec![a, b]);
    let mut pairs = Vec::new();

    for i in 0..m {
        for j in 0..m {
            let mut rhs = NCPoly::constant(delta(i, j));
            for k in 0..n - 1 {
                rhs.add_term(mono(u(i, k), v(j, k)), -Scalar::one());
            }
            pairs.push((mono(u(i, n - 1), v(j, n - 1)), rhs));
        }
    }
    for i in 0..m {
        for j in 0..m {
            let mut rhs = NCPoly::constant(e.get(i, j).clone());
            for k in 1..n {
                for l in 0..n {
                    rhs.add_term(mono(v(i, k), u(j, l)), -f.get(k, l));
                }
            }
            pairs.push((mono(v(i, 0), u(j, 0)), rhs.scale(&f11_inv)));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut rhs = NCPoly::constant(delta(i, j));
            for k in 1..m {
                rhs.add_term(mono(v(k, i), u(k, j)), -Scalar::one());
            }
            pairs.push((mono(v(0, i), u(0, j)), rhs));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut rhs = NCPoly::constant(fi.get(i, j).clone());
            for (k, ek) in e_diag_inv.iter().enumerate().take(m - 1) {
                rhs.add_term(mono(u(k, i), v(k, j)), -ek);
            }
            pairs.push((mono(u(m - 1, i), v(m - 1, j)), rhs.scale(e.get(m - 1, m - 1))));
        }
    }
    RewriteSystem::from_pairs(alphabet, pairs)
}

/// `H(E,F)` with the four relation families oriented as rewrite rules.
///
/// With `checked`, the freeness hypotheses are enforced first; unchecked
/// builds still require every rule to be compatible with the order.
pub fn build_hef(e: &ExactMatrix, f: &ExactMatrix, checked: bool) -> Result<PresentationSpec> {
    if checked {
        hef_hypotheses(e, f)?;
    }
    let system = hef_system(e, f, &HefNames::indexed(e.rows(), f.rows()))?;
    Ok(PresentationSpec { kind: PresentationKind::Hef, e: Some(e.clone()), f: Some(f.clone()), q: None, system })
}

fn require_nonzero(q: &Scalar) -> Result<()> {
    if q.is_zero() {
        Err(Error::InvalidArgument("q must be nonzero".into()))
    } else {
        Ok(())
    }
}

/// `H(q)`, the case `E = F = diag(q⁻¹, q)` with Greek generator names.
pub fn build_hq(q: &Scalar) -> Result<PresentationSpec> {
    require_nonzero(q)?;
    let fq = ExactMatrix::f_q(q)?;
    let system = hef_system(&fq, &fq, &HefNames::greek())?;
    Ok(PresentationSpec { kind: PresentationKind::Hq, e: Some(fq.clone()), f: Some(fq), q: Some(q.clone()), system })
}

/// `H(q)` extended by `t`, `t⁻¹` (named `t_inv`).
pub fn build_hplusq(q: &Scalar) -> Result<PresentationSpec> {
    let hq = build_hq(q)?;
    let mut names = hq.alphabet().names().to_vec();
    names.extend(["t_inv".to_string(), "t".to_string()]);
    let alphabet = Alphabet::new(names)?;
    let rebase = |r: &Rule| -> Result<Rule> { Rule::new(r.lhs().clone(), r.rhs().clone(), &alphabet) };
    let mut rules = hq.rules().iter().map(rebase).collect::<Result<Vec<_>>>()?;

    let qi = q.inv().expect("q nonzero");
    let one = Scalar::one();
    let t_rules: [(&str, Scalar, &str); 10] = [
        ("t.t_inv", one.clone(), "t_inv.t"),
        ("t_inv.t", one.clone(), "1"),
        ("t_inv.alpha", one.clone(), "delta*.t"),
        ("t.delta*", one.clone(), "alpha.t_inv"),
        ("t_inv.beta", -&qi, "gamma*.t"),
        ("t.gamma*", -q, "beta.t_inv"),
        ("t_inv.gamma", -q, "beta*.t"),
        ("t.beta*", -&qi, "gamma.t_inv"),
        ("t_inv.delta", one.clone(), "alpha*.t"),
        ("t.alpha*", one, "delta.t_inv"),
    ];
    for (l, c, r) in t_rules {
        let rhs = NCPoly::term(c, alphabet.parse_monomial(r)?);
        rules.push(Rule::new(alphabet.parse_monomial(l)?, rhs, &alphabet)?);
    }
    Ok(PresentationSpec {
        kind: PresentationKind::HPlusQ,
        e: hq.e,
        f: hq.f,
        q: Some(q.clone()),
        system: RewriteSystem::new(alphabet, rules),
    })
}

/// Generators of the quantum coordinate algebra, smallest first.
pub const SLQ2_ORDER: [&str; 4] = ["b", "c", "a", "d"];

fn slq2_pairs(alphabet: &Alphabet, q: &Scalar) -> Result<Vec<(Monomial, NCPoly)>> {
    let qi = q.inv().expect("q nonzero");
    let m = |s: &str| alphabet.parse_monomial(s);
    let t = |c: &Scalar, s: &str| -> Result<NCPoly> { Ok(NCPoly::term(c.clone(), m(s)?)) };
    let one = Scalar::one();
    Ok(vec![
        (m("a.b")?, t(&qi, "b.a")?),
        (m("a.c")?, t(&qi, "c.a")?),
        (m("c.b")?, t(&one, "b.c")?),
        (m("d.b")?, t(q, "b.d")?),
        (m("d.c")?, t(q, "c.d")?),
        (m("d.a")?, t(q, "b.c")?.add(&NCPoly::one())),
        (m("a.d")?, t(&qi, "b.c")?.add(&NCPoly::one())),
    ])
}

/// The quantum coordinate algebra on `a, b, c, d` under the order
/// `b < c < a < d`.
pub fn build_slq2(q: &Scalar) -> Result<PresentationSpec> {
    require_nonzero(q)?;
    let alphabet = Alphabet::new(SLQ2_ORDER)?;
    let pairs = slq2_pairs(&alphabet, q)?;
    Ok(PresentationSpec {
        kind: PresentationKind::SlQ2,
        e: None,
        f: None,
        q: Some(q.clone()),
        system: RewriteSystem::from_pairs(alphabet, pairs)?,
    })
}

/// Free product of Laurent polynomials in `z` with the quantum coordinate
/// algebra; `z` and `z_inv` sit above `a, b, c, d`.
pub fn build_freeprod(q: &Scalar) -> Result<PresentationSpec> {
    require_nonzero(q)?;
    let mut names: Vec<&str> = SLQ2_ORDER.to_vec();
    names.extend(["z_inv", "z"]);
    let alphabet = Alphabet::new(names)?;
    let mut pairs = vec![
        (alphabet.parse_monomial("z.z_inv")?, NCPoly::one()),
        (alphabet.parse_monomial("z_inv.z")?, NCPoly::one()),
    ];
    pairs.extend(slq2_pairs(&alphabet, q)?);
    Ok(PresentationSpec {
        kind: PresentationKind::FreeProd,
        e: None,
        f: None,
        q: Some(q.clone()),
        system: RewriteSystem::from_pairs(alphabet, pairs)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub residual: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub checks: Vec<RelationCheck>,
    pub well_defined: bool,
}

/// Substitutes `images` (indexed by source generator) into every rule of
/// `source` and reduces `lhs - rhs` in `target`.
pub fn check_morphism(source: &RewriteSystem, target: &RewriteSystem, images: &[NCPoly]) -> Result<MorphismReport> {
    if images.len() != source.alphabet().len() {
        return Err(Error::DimensionMismatch(format!(
            "{} images for {} generators",
            images.len(),
            source.alphabet().len()
        )));
    }
    let checks: Vec<RelationCheck> = source
        .rules()
        .iter()
        .map(|r| {
            let res = target.reduce(&RewriteSystem::substitute(&r.relation(), images));
            RelationCheck {
                relation: format!("{} = {}", r.lhs().display(source.alphabet()), r.rhs().display(source.alphabet())),
                residual: res.display(target.alphabet()).to_string(),
                holds: res.is_zero(),
            }
        })
        .collect();
    Ok(MorphismReport { well_defined: checks.iter().all(|c| c.holds), checks })
}

/// Images of the `H(q)` generators in the free product, in `H(q)` alphabet
/// order.
pub fn pi_images(hq: &PresentationSpec, fp: &PresentationSpec, q: &Scalar) -> Result<Vec<NCPoly>> {
    let qi = q.inv().ok_or_else(|| Error::InvalidArgument("q must be nonzero".into()))?;
    let a = fp.alphabet();
    let img = |c: Scalar, s: &str| -> Result<NCPoly> { Ok(NCPoly::term(c, a.parse_monomial(s)?)) };
    hq.alphabet()
        .names()
        .iter()
        .map(|n| match n.as_str() {
            "alpha" => img(Scalar::one(), "z.a"),
            "beta" => img(Scalar::one(), "z.b"),
            "gamma" => img(Scalar::one(), "z.c"),
            "delta" => img(Scalar::one(), "z.d"),
            "alpha*" => img(Scalar::one(), "d.z_inv"),
            "beta*" => img(-&qi, "c.z_inv"),
            "gamma*" => img(-q, "b.z_inv"),
            "delta*" => img(Scalar::one(), "a.z_inv"),
            other => Err(Error::InvalidArgument(format!("no image for '{other}'"))),
        })
        .collect()
}

/// Checks that `pi` respects every `H(q)` relation.
pub fn verify_pi(q: &Scalar) -> Result<MorphismReport> {
    let hq = build_hq(q)?;
    let fp = build_freeprod(q)?;
    let images = pi_images(&hq, &fp, q)?;
    check_morphism(&hq.system, &fp.system, &images)
}

/// Relations of the quantum automorphism algebra of `(M_n, tr_F)`, as data.
#[derive(Clone, Debug)]
pub struct AautRelations {
    pub n: usize,
    pub alphabet: Alphabet,
    /// Multiplicativity, `F`-twisted multiplicativity, counit, trace.
    pub families: [Vec<NCPoly>; 4],
}

impl AautRelations {
    pub fn counts(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|i| self.families[i].len())
    }

    /// Name of `X_{ij}^{kl}` (1-based).
    pub fn generator(i: usize, j: usize, k: usize, l: usize) -> String {
        format!("X{i}{j}_{k}{l}")
    }

    pub fn render(&self) -> String {
        const TITLES: [&str; 4] = ["product", "twisted product", "counit", "trace"];
        let mut s = String::new();
        for (t, fam) in TITLES.iter().zip(&self.families) {
            s.push_str(&format!("# {t} ({})\n", fam.len()));
            for p in fam {
                s.push_str(&format!("{} = 0\n", p.display(&self.alphabet)));
            }
        }
        s
    }
}

/// Upper bound on `n` for [`build_aaut`]; beyond it the relation count is
/// impractical to emit.
pub const AAUT_MAX_N: usize = 6;

pub fn build_aaut(f: &ExactMatrix) -> Result<AautRelations> {
    if !f.is_square() {
        return Err(Error::NotSquare { rows: f.rows(), cols: f.cols() });
    }
    let n = f.rows();
    if n == 0 || n > AAUT_MAX_N {
        return Err(Error::BoundExceeded { what: "matrix size", got: n, limit: AAUT_MAX_N });
    }
    let fi = f.inverse()?;
    let mut names = Vec::with_capacity(n.pow(4));
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    names.push(AautRelations::generator(i, j, k, l));
                }
            }
        }
    }
    let alphabet = Alphabet::new(names)?;
    let x = |i: usize, j: usize, k: usize, l: usize| {
        alphabet.id(&AautRelations::generator(i + 1, j + 1, k + 1, l + 1)).expect("generator exists")
    };
    let m1 = |g| Monomial::new(vec![g]);
    let m2 = |g, h| Monomial::new(vec![g, h]);
    let idx6 = || {
        (0..n.pow(6)).map(move |mut c| {
            let mut v = [0usize; 6];
            for slot in v.iter_mut().rev() {
                *slot = c % n;
                c /= n;
            }
            v
        })
    };

    let product = idx6()
        .map(|[r, s, i, j, k, l]| {
            let mut p = NCPoly::zero();
            for t in 0..n {
                p.add_term(m2(x(r, t, i, j), x(t, s, k, l)), Scalar::one());
            }
            p.add_term(m1(x(r, s, i, l)), -delta(j, k));
            p
        })
        .collect();
    let twisted = idx6()
        .map(|[k, l, r, s, i, j]| {
            let mut p = NCPoly::zero();
            for t in 0..n {
                for q in 0..n {
                    p.add_term(m2(x(k, l, i, t), x(r, s, q, j)), f.get(t, q).clone());
                }
            }
            p.add_term(m1(x(k, s, i, j)), -f.get(l, r));
            p
        })
        .collect();
    let mut counit = Vec::new();
    let mut trace = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut p = NCPoly::constant(-delta(i, j));
            for t in 0..n {
                p.add_term(m1(x(i, j, t, t)), Scalar::one());
            }
            counit.push(p);
            let mut p = NCPoly::constant(-fi.get(i, j));
            for t in 0..n {
                for q in 0..n {
                    p.add_term(m1(x(t, q, i, j)), fi.get(t, q).clone());
                }
            }
            trace.push(p);
        }
    }
    Ok(AautRelations { n, alphabet, families: [product, twisted, counit, trace] })
}
