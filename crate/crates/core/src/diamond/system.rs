use std::collections::HashMap;

use serde::Serialize;

use super::monomial::{Alphabet, GenId, Monomial};
use super::ncpoly::NCPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A reduction `lhs → rhs` with every monomial of `rhs` strictly below `lhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    lhs: Monomial,
    rhs: NCPoly,
}

impl Rule {
    /// Checks compatibility with the degree-lexicographic order.
    pub fn new(lhs: Monomial, rhs: NCPoly, alphabet: &Alphabet) -> Result<Rule> {
        if lhs.is_one() {
            return Err(Error::InvalidArgument("a rule needs a nonempty left side".into()));
        }
        if let Some(bad) = rhs.terms().map(|(m, _)| m).find(|m| **m >= lhs) {
            return Err(Error::IncompatibleRule {
                lhs: lhs.display(alphabet).to_string(),
                rhs: rhs.display(alphabet).to_string(),
                term: bad.display(alphabet).to_string(),
            });
        }
        Ok(Rule { lhs, rhs })
    }

    pub fn lhs(&self) -> &Monomial {
        &self.lhs
    }

    pub fn rhs(&self) -> &NCPoly {
        &self.rhs
    }

    /// `lhs - rhs`, the relation this rule orients.
    pub fn relation(&self) -> NCPoly {
        NCPoly::monomial(self.lhs.clone()).sub(&self.rhs)
    }
}

/// Which occurrence of a left side gets rewritten inside a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Leftmost occurrence; among rules matching there, the longest left side,
    /// then the earliest rule.
    #[default]
    Leftmost,
    /// Rightmost starting position, same tie-breaks.
    Rightmost,
}

/// An ordered alphabet with compatible rules.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    rules: Vec<Rule>,
    by_first: HashMap<GenId, Vec<usize>>,
}

/// Default cap on the number of monomials [`RewriteSystem::reduced_monomials`]
/// will list.
pub const REDUCED_MONOMIAL_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    /// Number of monomials in the subset generators that were checked.
    pub checked: usize,
    /// First monomial (in order) that contains a left side, if any.
    pub counterexample: Option<String>,
}

impl FreenessReport {
    pub fn is_free(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl RewriteSystem {
    pub fn new(alphabet: Alphabet, rules: Vec<Rule>) -> Self {
        let mut by_first: HashMap<GenId, Vec<usize>> = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            by_first.entry(r.lhs.gens()[0]).or_default().push(i);
        }
        RewriteSystem { alphabet, rules, by_first }
    }

    /// Builds rules from `(lhs, rhs)` pairs, checking each for compatibility.
    pub fn from_pairs(alphabet: Alphabet, pairs: Vec<(Monomial, NCPoly)>) -> Result<Self> {
        let rules = pairs.into_iter().map(|(l, r)| Rule::new(l, r, &alphabet)).collect::<Result<Vec<_>>>()?;
        Ok(RewriteSystem::new(alphabet, rules))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// A system with extra rules appended, over the same alphabet.
    pub fn extended(&self, extra: Vec<Rule>) -> RewriteSystem {
        let mut rules = self.rules.clone();
        rules.extend(extra);
        RewriteSystem::new(self.alphabet.clone(), rules)
    }

    fn match_at(&self, m: &Monomial, pos: usize) -> Option<usize> {
        let first = m.gens()[pos];
        self.by_first
            .get(&first)?
            .iter()
            .copied()
            .filter(|&r| m.gens()[pos..].starts_with(self.rules[r].lhs.gens()))
            .min_by_key(|&r| (std::cmp::Reverse(self.rules[r].lhs.len()), r))
    }

    /// Finds a redex in `m`: `(position, rule index)`.
    pub fn find_redex(&self, m: &Monomial, strategy: Strategy) -> Option<(usize, usize)> {
        let n = m.len();
        match strategy {
            Strategy::Leftmost => (0..n).find_map(|p| self.match_at(m, p).map(|r| (p, r))),
            Strategy::Rightmost => (0..n).rev().find_map(|p| self.match_at(m, p).map(|r| (p, r))),
        }
    }

    pub fn is_reduced(&self, m: &Monomial) -> bool {
        self.find_redex(m, Strategy::Leftmost).is_none()
    }

    /// Rewrites `rule` at `pos` inside `m` once.
    pub fn apply_at(&self, m: &Monomial, pos: usize, rule: usize) -> NCPoly {
        let r = &self.rules[rule];
        debug_assert!(m.gens()[pos..].starts_with(r.lhs.gens()));
        let (prefix, suffix) = (&m.gens()[..pos], &m.gens()[pos + r.lhs.len()..]);
        NCPoly::from_terms(r.rhs.terms().map(|(rm, c)| (c.clone(), Monomial::sandwich(prefix, rm, suffix))))
    }

    /// Normal form with the default strategy.
    pub fn reduce(&self, p: &NCPoly) -> NCPoly {
        self.reduce_with(p, Strategy::default())
    }

    /// Rewrites the largest reducible monomial until none is left.
    ///
    /// Every rewrite replaces a monomial by strictly smaller ones, so taking
    /// the largest remaining term each time finishes each monomial for good
    /// the moment it is found irreducible.
    pub fn reduce_with(&self, p: &NCPoly, strategy: Strategy) -> NCPoly {
        let mut work = p.clone();
        let mut done = NCPoly::zero();
        while let Some((m, c)) = work.pop_largest() {
            match self.find_redex(&m, strategy) {
                None => done.add_term(m, c),
                Some((pos, rule)) => {
                    let r = &self.rules[rule];
                    let (prefix, suffix) = (&m.gens()[..pos], &m.gens()[pos + r.lhs.len()..]);
                    for (rm, rc) in r.rhs.terms() {
                        work.add_term(Monomial::sandwich(prefix, rm, suffix), &c * rc);
                    }
                }
            }
        }
        done
    }

    pub fn reduce_monomial(&self, m: &Monomial) -> NCPoly {
        self.reduce(&NCPoly::monomial(m.clone()))
    }

    /// All reduced monomials of length at most `max_len`, in order.
    pub fn reduced_monomials(&self, max_len: usize) -> Result<Vec<Monomial>> {
        self.reduced_monomials_capped(max_len, REDUCED_MONOMIAL_LIMIT)
    }

    pub fn reduced_monomials_capped(&self, max_len: usize, limit: usize) -> Result<Vec<Monomial>> {
        let gens: Vec<GenId> = (0..self.alphabet.len() as GenId).collect();
        self.enumerate_reduced(&gens, max_len, limit, |_| true).map(|(v, _)| v)
    }

    /// Extends reduced words one letter at a time; a one-letter extension of a
    /// reduced word can only become reducible through a left side ending at
    /// the new letter.
    fn enumerate_reduced(
        &self,
        gens: &[GenId],
        max_len: usize,
        limit: usize,
        mut keep_going: impl FnMut(&Monomial) -> bool,
    ) -> Result<(Vec<Monomial>, Option<Monomial>)> {
        let mut out = vec![Monomial::one()];
        let mut layer = vec![Monomial::one()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for m in &layer {
                for &g in gens {
                    let mut v = m.gens().to_vec();
                    v.push(g);
                    let cand = Monomial::new(v);
                    let ends_in_lhs = self.rules.iter().any(|r| cand.gens().ends_with(r.lhs.gens()));
                    if ends_in_lhs {
                        if !keep_going(&cand) {
                            return Ok((out, Some(cand)));
                        }
                        continue;
                    }
                    next.push(cand);
                }
            }
            if out.len() + next.len() > limit {
                return Err(Error::BoundExceeded {
                    what: "reduced monomial count",
                    got: out.len() + next.len(),
                    limit,
                });
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        Ok((out, None))
    }

    /// Checks that every monomial of length at most `max_len` in the `subset`
    /// generators is reduced. With a confluent system the reduced monomials
    /// are a basis, so this certifies that the subset generates a free
    /// subalgebra up to that degree.
    pub fn is_free_family(&self, subset: &[GenId], max_len: usize) -> Result<FreenessReport> {
        let report = self.confluence_report();
        if !report.confluent {
            return Err(Error::NotConfluent(format!(
                "{} of {} ambiguities do not resolve",
                report.unresolved_count(),
                report.records.len()
            )));
        }
        self.free_family_unchecked(subset, max_len)
    }

    /// Same as [`Self::is_free_family`] without the confluence check.
    pub fn free_family_unchecked(&self, subset: &[GenId], max_len: usize) -> Result<FreenessReport> {
        let mut gens = subset.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if let Some(&g) = gens.iter().find(|&&g| g as usize >= self.alphabet.len()) {
            return Err(Error::InvalidArgument(format!("generator index {g} out of range")));
        }
        let (all, bad) = self.enumerate_reduced(&gens, max_len, REDUCED_MONOMIAL_LIMIT, |_| false)?;
        Ok(FreenessReport {
            checked: all.len() + usize::from(bad.is_some()),
            counterexample: bad.map(|m| m.display(&self.alphabet).to_string()),
        })
    }

    /// `p` with each generator replaced by the given polynomial.
    pub fn substitute(p: &NCPoly, images: &[NCPoly]) -> NCPoly {
        let mut out = NCPoly::zero();
        for (m, c) in p.terms() {
            let mut acc = NCPoly::constant(c.clone());
            for &g in m.gens() {
                acc = acc.mul(&images[g as usize]);
            }
            out = out.add(&acc);
        }
        out
    }

    /// Convenience for tests and builders: a polynomial from
    /// `(coefficient, generator names)` pairs.
    pub fn poly(&self, terms: &[(Scalar, &[&str])]) -> Result<NCPoly> {
        let mut p = NCPoly::zero();
        for (c, names) in terms {
            p.add_term(self.alphabet.monomial(names)?, c.clone());
        }
        Ok(p)
    }
}
