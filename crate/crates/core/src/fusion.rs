//! Fusion rules of `H(F)` for generic `F`.
//!
//! Simple comodules are labelled by words in the free monoid on two letters
//! `α`, `β` (spelled `a` and `b`). The tensor product of two simples is given
//! by the product `x ⊙ y = Σ ab` over all factorizations `x = ag`, `y = ḡb`,
//! where `ḡ` is the bar involution: reverse the word and swap the letters.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Alpha,
    Beta,
}

impl Letter {
    pub fn bar(self) -> Letter {
        match self {
            Letter::Alpha => Letter::Beta,
            Letter::Beta => Letter::Alpha,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::Alpha => 'a',
            Letter::Beta => 'b',
        }
    }
}

/// An element of the free monoid on `{α, β}`; the empty word is the unit `e`.
///
/// Ordered by length, then lexicographically with `α < β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn alpha() -> Self {
        Word(vec![Letter::Alpha])
    }

    pub fn beta() -> Self {
        Word(vec![Letter::Beta])
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Monoid product (concatenation).
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `w` repeated `n` times.
    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// Antimultiplicative involution: reverse and swap `α ↔ β`.
    pub fn bar(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.bar()).collect())
    }

    /// All words of length exactly `n`, in canonical order.
    pub fn all_of_len(n: usize) -> impl Iterator<Item = Word> {
        (0u64..1 << n).map(move |bits| {
            Word((0..n).map(|i| if bits >> (n - 1 - i) & 1 == 0 { Letter::Alpha } else { Letter::Beta }).collect())
        })
    }

    /// All words of length at most `n`, in canonical order.
    pub fn all_up_to(n: usize) -> impl Iterator<Item = Word> {
        (0..=n).flat_map(Word::all_of_len)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseError;

    /// `a`/`b` strings; `e` is the empty word.
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let s = s.trim();
        if s == "e" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(ParseError::new(1, 1, "empty word must be spelled 'e'"));
        }
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                'a' => Ok(Letter::Alpha),
                'b' => Ok(Letter::Beta),
                _ => Err(ParseError::new(1, i + 1, format!("invalid letter '{c}' (expected 'a' or 'b')"))),
            })
            .collect::<std::result::Result<_, _>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A ℤ-linear combination of words: an element of `(ℤ⟨α,β⟩, ⊙)`, or the
/// character of a (virtual) comodule.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FusionElement {
    terms: BTreeMap<Word, i64>,
}

impl FusionElement {
    pub fn zero() -> Self {
        FusionElement::default()
    }

    pub fn unit() -> Self {
        FusionElement::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, 1);
        FusionElement { terms }
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &FusionElement) -> FusionElement {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> FusionElement {
        let mut out = FusionElement::zero();
        for (w, &m) in &self.terms {
            out.add_term(w.clone(), m * c);
        }
        out
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Bilinear extension of [`odot`].
    pub fn odot(&self, other: &FusionElement) -> FusionElement {
        let mut out = FusionElement::zero();
        for (x, &cx) in &self.terms {
            for (y, &cy) in &other.terms {
                for (w, c) in odot(x, y).terms {
                    out.add_term(w, c * cx * cy);
                }
            }
        }
        out
    }

    /// Additive extension of [`dim`].
    pub fn dim(&self, n: u64) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (w, &c) in &self.terms {
            acc += dim(w, n)? * c;
        }
        Ok(acc)
    }

    /// Machine format: `(word, multiplicity)` pairs.
    pub fn to_pairs(&self) -> Vec<(Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w.clone(), c)).collect()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Word, i64)>) -> Self {
        let mut out = FusionElement::zero();
        for (w, c) in pairs {
            out.add_term(w, c);
        }
        out
    }

    /// Rendering with `⊕` and `U_` labels, for direct-sum displays.
    pub fn render_direct_sum(&self) -> String {
        if self.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(w, &c)| if c == 1 { format!("U_{w}") } else { format!("{c} U_{w}") })
            .collect::<Vec<_>>()
            .join(" ⊕ ")
    }
}

impl fmt::Display for FusionElement {
    /// Largest word first: `ab + e`, `2 aa - b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, &c)) in self.terms.iter().rev().enumerate() {
            let (sign, abs) = (c < 0, c.unsigned_abs());
            match (i, sign) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs != 1 {
                write!(f, "{abs} ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl Serialize for FusionElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter())
    }
}

impl<'de> Deserialize<'de> for FusionElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(Word, i64)> = Vec::deserialize(d)?;
        Ok(FusionElement::from_pairs(pairs))
    }
}

/// `ḡ`: reverse and swap letters.
pub fn bar(x: &Word) -> Word {
    x.bar()
}

/// The overlap lengths `|g|` of the factorizations `x = ag`, `y = ḡb`.
pub fn overlaps<'a>(x: &'a Word, y: &'a Word) -> impl Iterator<Item = usize> + 'a {
    let (xs, ys) = (x.letters(), y.letters());
    (0..=xs.len().min(ys.len())).filter(move |&k| {
        // ḡ = reverse(g) with letters swapped, compared against y[..k]
        xs[xs.len() - k..].iter().rev().zip(&ys[..k]).all(|(g, h)| g.bar() == *h)
    })
}

/// Banica's product `x ⊙ y = Σ_{x=ag, y=ḡb} ab`.
pub fn odot(x: &Word, y: &Word) -> FusionElement {
    let mut out = FusionElement::zero();
    for k in overlaps(x, y) {
        let a = &x.letters()[..x.len() - k];
        let b = &y.letters()[k..];
        out.add_term(Word([a, b].concat()), 1);
    }
    out
}

/// Decomposition of `U_x ⊗ U_y` into simple labels.
pub fn fuse(x: &Word, y: &Word) -> FusionElement {
    odot(x, y)
}

/// Label of the dual comodule: `U_x* ≅ U_x̄`.
pub fn dual(x: &Word) -> Word {
    x.bar()
}

/// Dimension of `U_x` for a parameter matrix of size `n`: the ⊙-morphism to
/// ℤ with `α, β ↦ n`.
///
/// Peeling off the first letter, `c ⊙ y = cy + [y starts with c̄] y'`, so
/// `D(cy) = n·D(y) - [y starts with c̄]·D(y')`.
pub fn dim(x: &Word, n: u64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("dimension parameter n must be at least 2, got {n}")));
    }
    let n = BigInt::from(n);
    let xs = x.letters();
    let len = xs.len();
    // d[p] = D(x[p..])
    let mut d = vec![BigInt::zero(); len + 2];
    d[len] = BigInt::one();
    for p in (0..len).rev() {
        let mut v = &n * &d[p + 1];
        if p + 1 < len && xs[p + 1] == xs[p].bar() {
            v -= &d[p + 2];
        }
        d[p] = v;
    }
    Ok(d.swap_remove(0))
}

/// Largest `max_len` accepted by [`fusion_table`].
pub const FUSION_TABLE_MAX_LEN: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionEntry {
    pub x: Word,
    pub y: Word,
    pub product: FusionElement,
}

/// All products `x ⊙ y` with `|x|, |y| ≤ max_len`, rows in canonical order.
pub fn fusion_table(max_len: usize) -> Result<Vec<FusionEntry>> {
    if max_len > FUSION_TABLE_MAX_LEN {
        return Err(Error::BoundExceeded { what: "max_len", got: max_len, limit: FUSION_TABLE_MAX_LEN });
    }
    let words: Vec<Word> = Word::all_up_to(max_len).collect();
    Ok(words
        .iter()
        .flat_map(|x| words.iter().map(move |y| FusionEntry { x: x.clone(), y: y.clone(), product: odot(x, y) }))
        .collect())
}
