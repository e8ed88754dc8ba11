use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::monomial::Monomial;
use super::ncpoly::NCPoly;
use super::system::{RewriteSystem, Strategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

/// A minimal word reducible in two ways.
///
/// For an overlap, a proper suffix of `lhs(first)` of length `offset` equals a
/// proper prefix of `lhs(second)`. For an inclusion, `lhs(first)` occurs in
/// `lhs(second)` starting at position `offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ambiguity {
    pub first: usize,
    pub second: usize,
    pub kind: AmbiguityKind,
    pub offset: usize,
    pub witness: Monomial,
}

impl Ambiguity {
    /// The two one-step reductions of the witness.
    pub fn branches(&self, sys: &RewriteSystem) -> (NCPoly, NCPoly) {
        let (r1, r2) = (&sys.rules()[self.first], &sys.rules()[self.second]);
        match self.kind {
            AmbiguityKind::Overlap => {
                let head = r1.lhs().len() - self.offset;
                (sys.apply_at(&self.witness, 0, self.first), sys.apply_at(&self.witness, head, self.second))
            }
            AmbiguityKind::Inclusion => {
                debug_assert_eq!(&self.witness, r2.lhs());
                let _ = r1;
                (sys.apply_at(&self.witness, self.offset, self.first), r2.rhs().clone())
            }
        }
    }

    /// Difference of the normal forms of both branches; zero when resolvable.
    pub fn residual(&self, sys: &RewriteSystem) -> NCPoly {
        let (a, b) = self.branches(sys);
        sys.reduce_with(&a.sub(&b), Strategy::Leftmost)
    }
}

/// All overlap and inclusion ambiguities, sorted by rule pair, kind, offset.
pub fn ambiguities(sys: &RewriteSystem) -> Vec<Ambiguity> {
    let rules = sys.rules();
    let mut out = Vec::new();
    for (i, ri) in rules.iter().enumerate() {
        let a = ri.lhs().gens();
        for (j, rj) in rules.iter().enumerate() {
            let b = rj.lhs().gens();
            for k in 1..a.len().min(b.len()) {
                if a[a.len() - k..] == b[..k] {
                    let mut w = a.to_vec();
                    w.extend_from_slice(&b[k..]);
                    out.push(Ambiguity {
                        first: i,
                        second: j,
                        kind: AmbiguityKind::Overlap,
                        offset: k,
                        witness: Monomial::new(w),
                    });
                }
            }
            if i == j || a.len() > b.len() || (a == b && i > j) {
                continue;
            }
            for p in rj.lhs().occurrences(ri.lhs()) {
                out.push(Ambiguity {
                    first: i,
                    second: j,
                    kind: AmbiguityKind::Inclusion,
                    offset: p,
                    witness: rj.lhs().clone(),
                });
            }
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmbiguityRecord {
    pub kind: AmbiguityKind,
    pub rules: (usize, usize),
    pub offset: usize,
    pub witness: String,
    pub resolved: bool,
    /// Normal form of the difference, `"0"` when resolved.
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfluenceReport {
    pub generators: Vec<String>,
    pub rule_count: usize,
    pub overlaps: usize,
    pub inclusions: usize,
    pub confluent: bool,
    pub records: Vec<AmbiguityRecord>,
}

impl ConfluenceReport {
    pub fn unresolved_count(&self) -> usize {
        self.records.iter().filter(|r| !r.resolved).count()
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &AmbiguityRecord> {
        self.records.iter().filter(|r| !r.resolved)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "generators: {}", self.generators.join(" < "));
        let _ = writeln!(
            s,
            "rules: {}  ambiguities: {} ({} overlap, {} inclusion)",
            self.rule_count,
            self.records.len(),
            self.overlaps,
            self.inclusions
        );
        for r in &self.records {
            let kind = match r.kind {
                AmbiguityKind::Overlap => "overlap",
                AmbiguityKind::Inclusion => "inclusion",
            };
            let status =
                if r.resolved { "resolved".to_string() } else { format!("UNRESOLVED residual {}", r.residual) };
            let _ = writeln!(
                s,
                "  {kind:<9} rules ({}, {}) at {}: {}  {status}",
                r.rules.0, r.rules.1, r.offset, r.witness
            );
        }
        let _ = write!(
            s,
            "{}",
            if self.confluent {
                "confluent: all ambiguities resolvable".to_string()
            } else {
                format!("not confluent: {} unresolved", self.unresolved_count())
            }
        );
        s
    }
}

impl RewriteSystem {
    pub fn ambiguities(&self) -> Vec<Ambiguity> {
        ambiguities(self)
    }

    /// Resolves every ambiguity in parallel.
    pub fn confluence_report(&self) -> ConfluenceReport {
        let amb = self.ambiguities();
        let records: Vec<AmbiguityRecord> = amb
            .par_iter()
            .map(|a| {
                let res = a.residual(self);
                AmbiguityRecord {
                    kind: a.kind,
                    rules: (a.first, a.second),
                    offset: a.offset,
                    witness: a.witness.display(self.alphabet()).to_string(),
                    resolved: res.is_zero(),
                    residual: res.display(self.alphabet()).to_string(),
                }
            })
            .collect();
        let overlaps = records.iter().filter(|r| r.kind == AmbiguityKind::Overlap).count();
        ConfluenceReport {
            generators: self.alphabet().names().to_vec(),
            rule_count: self.rules().len(),
            overlaps,
            inclusions: records.len() - overlaps,
            confluent: records.iter().all(|r| r.resolved),
            records,
        }
    }

    pub fn is_confluent(&self) -> bool {
        self.ambiguities().par_iter().all(|a| a.residual(self).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diamond::monomial::Alphabet;
    use crate::scalar::Scalar;

    fn sys(names: &[&str], rules: &[(&str, &[(i64, &str)])]) -> RewriteSystem {
        let a = Alphabet::new(names.iter().copied()).unwrap();
        let pairs = rules
            .iter()
            .map(|(l, r)| {
                let rhs = NCPoly::from_terms(r.iter().map(|(c, m)| (Scalar::int(*c), a.parse_monomial(m).unwrap())));
                (a.parse_monomial(l).unwrap(), rhs)
            })
            .collect();
        RewriteSystem::from_pairs(a, pairs).unwrap()
    }

    #[test]
    fn self_overlap_counts_each_length() {
        let s = sys(&["a"], &[("a.a.a", &[(1, "1")])]);
        let amb = s.ambiguities();
        assert_eq!(amb.len(), 2);
        assert!(amb.iter().all(|a| a.kind == AmbiguityKind::Overlap));
        assert!(s.is_confluent());
    }

    #[test]
    fn duplicate_lhs_counted_once() {
        let s = sys(&["a", "b"], &[("b.a", &[(1, "a.b")]), ("b.a", &[(2, "a.b")])]);
        let amb = s.ambiguities();
        let inc: Vec<_> = amb.iter().filter(|a| a.kind == AmbiguityKind::Inclusion).collect();
        assert_eq!(inc.len(), 1);
        assert_eq!((inc[0].first, inc[0].second), (0, 1));
        let rep = s.confluence_report();
        assert!(!rep.confluent);
        assert_eq!(rep.unresolved().next().unwrap().residual, "-a.b");
    }

    #[test]
    fn commutative_polynomials_confluent() {
        let s = sys(&["x", "y", "z"], &[("y.x", &[(1, "x.y")]), ("z.x", &[(1, "x.z")]), ("z.y", &[(1, "y.z")])]);
        let rep = s.confluence_report();
        assert_eq!((rep.overlaps, rep.inclusions), (1, 0));
        assert!(rep.confluent);
        assert!(rep.to_text().ends_with("confluent: all ambiguities resolvable"));
    }

    #[test]
    fn nonconfluent_detected() {
        // y.y.x reduces to x.x one way and to x the other
        let s = sys(&["x", "y"], &[("y.x", &[(1, "y")]), ("y.y", &[(1, "x")])]);
        assert!(!s.is_confluent());
    }
}
