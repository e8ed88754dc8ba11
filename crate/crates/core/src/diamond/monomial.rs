use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a generator; the generator order is the index order.
pub type GenId = u32;

/// Ordered, named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, GenId>,
}

/// Generator names: a letter followed by letters, digits, `_`, `*` or `'`.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '*' | '\''))
}

impl Alphabet {
    /// Generators listed from smallest to largest.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if !is_valid_name(n) {
                return Err(Error::InvalidArgument(format!("invalid generator name '{n}'")));
            }
            if index.insert(n.clone(), i as GenId).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate generator '{n}'")));
            }
        }
        Ok(Alphabet { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: GenId) -> &str {
        &self.names[g as usize]
    }

    pub fn id(&self, name: &str) -> Option<GenId> {
        self.index.get(name).copied()
    }

    /// Looks up generators by name, failing on the first unknown one.
    pub fn ids(&self, names: &[&str]) -> Result<Vec<GenId>> {
        names
            .iter()
            .map(|n| self.id(n).ok_or_else(|| Error::InvalidArgument(format!("unknown generator '{n}'"))))
            .collect()
    }

    pub fn monomial(&self, names: &[&str]) -> Result<Monomial> {
        Ok(Monomial(self.ids(names)?))
    }

    /// Parses `g1.g2.g3`; `1` is the empty monomial.
    pub fn parse_monomial(&self, s: &str) -> Result<Monomial> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let parts: Vec<&str> = s.split('.').map(str::trim).collect();
        self.monomial(&parts)
    }

    /// The generators with their order index, for display.
    pub fn render_order(&self) -> String {
        self.names.join(" < ")
    }
}

/// A word in the generators, compared degree-lexicographically: by length,
/// then lexicographically by generator order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub(crate) Vec<GenId>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(gens: Vec<GenId>) -> Self {
        Monomial(gens)
    }

    pub fn gens(&self) -> &[GenId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    /// `a · self · b` given as slices.
    pub(crate) fn sandwich(prefix: &[GenId], mid: &Monomial, suffix: &[GenId]) -> Monomial {
        let mut v = Vec::with_capacity(prefix.len() + mid.len() + suffix.len());
        v.extend_from_slice(prefix);
        v.extend_from_slice(&mid.0);
        v.extend_from_slice(suffix);
        Monomial(v)
    }

    /// Positions where `factor` occurs.
    pub fn occurrences<'a>(&'a self, factor: &'a Monomial) -> impl Iterator<Item = usize> + 'a {
        let n = factor.len();
        (0..(self.len() + 1).saturating_sub(n)).filter(move |&p| self.0[p..p + n] == factor.0[..])
    }

    pub fn contains(&self, factor: &Monomial) -> bool {
        self.occurrences(factor).next().is_some()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, alphabet }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    alphabet: &'a Alphabet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        for (i, &g) in self.m.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(self.alphabet.name(g))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deg_lex_order() {
        let m = |v: &[GenId]| Monomial(v.to_vec());
        assert!(m(&[1]) < m(&[0, 0]));
        assert!(m(&[0, 1]) < m(&[1, 0]));
        assert!(Monomial::one() < m(&[0]));
        // multiplicative: a < b implies xay < xby
        assert!(m(&[2, 0, 1]) < m(&[2, 1, 1]));
    }

    #[test]
    fn occurrences_and_contains() {
        let w = Monomial(vec![0, 1, 0, 1, 0]);
        let f = Monomial(vec![0, 1, 0]);
        assert_eq!(w.occurrences(&f).collect::<Vec<_>>(), vec![0, 2]);
        assert!(!Monomial(vec![0]).contains(&f));
        assert!(w.contains(&Monomial::one()));
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["1a"]).is_err());
        let a = Alphabet::new(["alpha*", "t_inv", "u11"]).unwrap();
        assert_eq!(a.id("t_inv"), Some(1));
        let m = a.parse_monomial("u11.alpha*").unwrap();
        assert_eq!(m.display(&a).to_string(), "u11.alpha*");
        assert!(a.parse_monomial("u11.nope").is_err());
        assert_eq!(a.parse_monomial("1").unwrap(), Monomial::one());
    }
}
