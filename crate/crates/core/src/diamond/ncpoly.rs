use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use super::monomial::{Alphabet, Monomial};
use crate::scalar::Scalar;

/// A noncommutative polynomial: finitely many monomials with nonzero
/// coefficients, kept in monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::term(c, Monomial::one())
    }

    pub fn one() -> Self {
        NCPoly::constant(Scalar::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        NCPoly::term(Scalar::one(), m)
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, Monomial)>) -> Self {
        let mut p = NCPoly::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from smallest to largest monomial.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub(crate) fn pop_largest(&mut self) -> Option<(Monomial, Scalar)> {
        self.terms.pop_last()
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.concat(m2), c1 * c2);
            }
        }
        out
    }

    /// Whether every coefficient is a multiple of `c` by a rational number.
    pub fn is_rational_multiple_of(&self, c: &Scalar) -> bool {
        match c.inv() {
            None => self.is_zero(),
            Some(inv) => self.terms.values().all(|a| (a * &inv).as_rational().is_some()),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> NCPolyDisplay<'a> {
        NCPolyDisplay { p: self, alphabet }
    }
}

/// Renders in the presentation-file grammar, largest monomial first:
/// `[q^2] beta*.beta - 2 u11.v11 + 1`.
pub struct NCPolyDisplay<'a> {
    p: &'a NCPoly,
    alphabet: &'a Alphabet,
}

impl fmt::Display for NCPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.p.terms.iter().rev().enumerate() {
            let (neg, coeff) = match c {
                Scalar::Rational(r) if r.is_negative() => (true, -c),
                Scalar::Function(rf) if rf.numerator().leading().is_some_and(|l| l.is_negative()) => (true, -c),
                _ => (false, c.clone()),
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let coeff_str = match &coeff {
                Scalar::Rational(_) => coeff.to_string(),
                Scalar::Function(_) => format!("[{coeff}]"),
            };
            match (m.is_one(), coeff.is_one()) {
                (true, _) => f.write_str(&coeff_str)?,
                (false, true) => write!(f, "{}", m.display(self.alphabet))?,
                (false, false) => write!(f, "{coeff_str} {}", m.display(self.alphabet))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_cancellation() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let x = NCPoly::monomial(a.parse_monomial("x").unwrap());
        let y = NCPoly::monomial(a.parse_monomial("y").unwrap());
        let xy = x.mul(&y);
        let yx = y.mul(&x);
        assert_ne!(xy, yx);
        let c = xy.sub(&yx).add(&yx);
        assert_eq!(c, xy);
        assert!(xy.sub(&xy).is_zero());
        assert_eq!(xy.leading_monomial().unwrap().display(&a).to_string(), "x.y");
    }

    #[test]
    fn rendering() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let p = NCPoly::from_terms([
            (Scalar::int(-2), a.parse_monomial("x.y").unwrap()),
            (Scalar::one(), Monomial::one()),
            (Scalar::q_pow(2), a.parse_monomial("y.y").unwrap()),
        ]);
        assert_eq!(p.display(&a).to_string(), "[q^2] y.y - 2 x.y + 1");
        assert_eq!(NCPoly::zero().display(&a).to_string(), "0");
    }
}
