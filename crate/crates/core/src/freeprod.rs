//! Representation ring of the free product `k[z,z⁻¹] * O(SL_q(2))` at generic
//! `q`, and the embedding `ψ` of the ⊙-ring into it.
//!
//! Simple comodules of the free product are alternated words: tensor products
//! of nontrivial simples `Z^i` (of `k[z,z⁻¹]`) and `V_j` (of `O(SL_q(2))`)
//! whose consecutive factors come from different sides.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fusion::{Letter, Word};

/// A nontrivial simple factor. Ordered with all `Z`s before all `V`s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index")]
pub enum AltFactor {
    /// `Z^i`, `i ≠ 0`.
    Z(i64),
    /// `V_j`, `j ≥ 1`, of dimension `j + 1`.
    V(u32),
}

impl AltFactor {
    fn same_side(self, other: AltFactor) -> bool {
        matches!((self, other), (AltFactor::Z(_), AltFactor::Z(_)) | (AltFactor::V(_), AltFactor::V(_)))
    }

    fn is_valid(self) -> bool {
        match self {
            AltFactor::Z(i) => i != 0,
            AltFactor::V(j) => j >= 1,
        }
    }
}

impl fmt::Display for AltFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AltFactor::Z(i) => write!(f, "Z^{i}"),
            AltFactor::V(j) => write!(f, "V_{j}"),
        }
    }
}

/// A simple alternated comodule; the empty word is the trivial comodule.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<AltFactor>", into = "Vec<AltFactor>")]
pub struct AltWord(Vec<AltFactor>);

impl AltWord {
    pub fn trivial() -> Self {
        AltWord(Vec::new())
    }

    /// Checks the factor and alternation invariants.
    pub fn new(factors: Vec<AltFactor>) -> Result<Self> {
        if let Some(f) = factors.iter().find(|f| !f.is_valid()) {
            return Err(Error::InvalidArgument(format!("{f} is trivial and cannot appear in an alternated word")));
        }
        if factors.windows(2).any(|w| w[0].same_side(w[1])) {
            return Err(Error::InvalidArgument("adjacent factors must alternate between Z and V".into()));
        }
        Ok(AltWord(factors))
    }

    pub fn factors(&self) -> &[AltFactor] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<AltFactor> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<AltFactor> {
        self.0.last().copied()
    }
}

impl TryFrom<Vec<AltFactor>> for AltWord {
    type Error = Error;
    fn try_from(v: Vec<AltFactor>) -> Result<Self> {
        AltWord::new(v)
    }
}

impl From<AltWord> for Vec<AltFactor> {
    fn from(w: AltWord) -> Self {
        w.0
    }
}

impl Ord for AltWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AltWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AltWord {
    /// `Z^1 V_2 Z^-1`; the trivial word renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// An integer combination of alternated words (a virtual character).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RepElement {
    terms: BTreeMap<AltWord, i64>,
}

impl RepElement {
    pub fn zero() -> Self {
        RepElement::default()
    }

    pub fn trivial() -> Self {
        RepElement::from_word(AltWord::trivial())
    }

    pub fn from_word(w: AltWord) -> Self {
        let mut r = RepElement::zero();
        r.add_term(w, 1);
        r
    }

    pub fn add_term(&mut self, w: AltWord, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &RepElement) -> RepElement {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &RepElement) -> RepElement {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&AltWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(w)` when the element is exactly one simple with multiplicity 1.
    pub fn as_simple(&self) -> Option<&AltWord> {
        match self.terms.iter().next() {
            Some((w, 1)) if self.terms.len() == 1 => Some(w),
            _ => None,
        }
    }

    /// Additive extension of [`alt_dim`].
    pub fn dim(&self) -> i128 {
        self.terms.iter().map(|(w, &c)| alt_dim(w) as i128 * c as i128).sum()
    }
}

impl fmt::Display for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(w, &c)| match c {
                1 => format!("[{w}]"),
                _ => format!("{c}[{w}]"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for RepElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter())
    }
}

/// `V_i ⊗ V_j = ⊕ V_k` for `k = |i-j|, |i-j|+2, …, i+j`.
///
/// Obtained by iterating `V_i ⊗ V_1 = V_{i-1} ⊕ V_{i+1}` on `V_j`, which is
/// `V_1^{⊗j}` minus lower terms.
pub fn clebsch_gordan(i: u32, j: u32) -> Vec<u32> {
    (i.abs_diff(j)..=i + j).step_by(2).collect()
}

/// Product of two basis words, resolving the junction.
fn join(left: &[AltFactor], right: &[AltFactor], out: &mut RepElement, mult: i64) {
    let (Some(&l), Some(&r)) = (left.last(), right.first()) else {
        out.add_term(AltWord([left, right].concat()), mult);
        return;
    };
    let (head, tail) = (&left[..left.len() - 1], &right[1..]);
    match (l, r) {
        (AltFactor::Z(i), AltFactor::Z(j)) => {
            if i + j == 0 {
                join(head, tail, out, mult);
            } else {
                out.add_term(AltWord([head, &[AltFactor::Z(i + j)], tail].concat()), mult);
            }
        }
        (AltFactor::V(i), AltFactor::V(j)) => {
            for k in clebsch_gordan(i, j) {
                if k == 0 {
                    join(head, tail, out, mult);
                } else {
                    out.add_term(AltWord([head, &[AltFactor::V(k)], tail].concat()), mult);
                }
            }
        }
        _ => out.add_term(AltWord([left, right].concat()), mult),
    }
}

/// Bilinear tensor product in the representation ring.
pub fn multiply(u: &RepElement, v: &RepElement) -> RepElement {
    let mut out = RepElement::zero();
    for (x, &cx) in &u.terms {
        for (y, &cy) in &v.terms {
            join(&x.0, &y.0, &mut out, cx * cy);
        }
    }
    out
}

/// `ψ(α) = χ(Z ⊗ V_1)`.
pub fn psi_alpha() -> AltWord {
    AltWord(vec![AltFactor::Z(1), AltFactor::V(1)])
}

/// `ψ(β) = χ(V_1 ⊗ Z⁻¹)`.
pub fn psi_beta() -> AltWord {
    AltWord(vec![AltFactor::V(1), AltFactor::Z(-1)])
}

/// The ⊙-algebra morphism `ψ` on a word, via the peel-off recursion
/// `ψ(cy) = ψ(c)·ψ(y) - [y starts with c̄]·ψ(y')`.
pub fn psi(x: &Word) -> RepElement {
    let xs = x.letters();
    let len = xs.len();
    // suffix values, p = len down to 0
    let mut vals: Vec<RepElement> = vec![RepElement::zero(); len + 1];
    vals[len] = RepElement::trivial();
    for p in (0..len).rev() {
        let head = RepElement::from_word(match xs[p] {
            Letter::Alpha => psi_alpha(),
            Letter::Beta => psi_beta(),
        });
        let mut v = multiply(&head, &vals[p + 1]);
        if p + 1 < len && xs[p + 1] == xs[p].bar() {
            v = v.sub(&vals[p + 2]);
        }
        vals[p] = v;
    }
    vals.swap_remove(0)
}

/// Dimension: product of `j + 1` over the `V_j` factors.
pub fn alt_dim(w: &AltWord) -> u128 {
    w.0.iter()
        .map(|f| match f {
            AltFactor::Z(_) => 1,
            AltFactor::V(j) => *j as u128 + 1,
        })
        .product()
}

/// Fusion for the `SO(3)`-type category: even spins of `SL_q(2)` reindexed
/// by halving, `W_k ⊗ W_l = ⊕_{m=|k-l|}^{k+l} W_m`.
pub fn so3_fuse(k: u32, l: u32) -> Vec<u32> {
    clebsch_gordan(2 * k, 2 * l).into_iter().filter(|m| m % 2 == 0).map(|m| m / 2).collect()
}
