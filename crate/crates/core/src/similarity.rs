//! Similarity of rational matrices through invariant factors.
//!
//! The invariant factors are read off the Smith normal form of `xI - A` over
//! ℚ[x]; two matrices are conjugate over ℚ exactly when their rational
//! canonical forms (companion blocks of the invariant factors) coincide.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::poly::Poly;
use crate::scalar::Scalar;

fn rational_entries(m: &ExactMatrix) -> Result<Vec<Vec<num_rational::BigRational>>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|e| {
                    e.as_rational()
                        .cloned()
                        .ok_or_else(|| Error::NotRational("similarity is decided over ℚ only".into()))
                })
                .collect()
        })
        .collect()
}

/// Monic invariant factors of degree at least one, each dividing the next.
pub fn invariant_factors(m: &ExactMatrix) -> Result<Vec<Poly>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let a = rational_entries(m)?;
    // characteristic matrix xI - A
    let mut s: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Poly::constant(-a[i][j].clone());
                    if i == j {
                        &Poly::x() + &c
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();

    for t in 0..n {
        loop {
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !s[i][j].is_zero())
                .min_by_key(|&(i, j)| s[i][j].degree());
            let Some((pi, pj)) = pivot else {
                break;
            };
            s.swap(t, pi);
            for row in s.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            let (head, tail) = s.split_at_mut(t + 1);
            let top = &head[t];
            for row in tail.iter_mut() {
                if row[t].is_zero() {
                    continue;
                }
                let (quo, rem) = row[t].div_rem(&top[t]);
                for (x, y) in row.iter_mut().zip(top).skip(t) {
                    let sub = &quo * y;
                    *x = &*x - &sub;
                }
                clean &= rem.is_zero();
            }
            for j in t + 1..n {
                if s[t][j].is_zero() {
                    continue;
                }
                let (quo, rem) = s[t][j].div_rem(&s[t][t]);
                for row in s.iter_mut().skip(t) {
                    let sub = &quo * &row[t];
                    row[j] = &row[j] - &sub;
                }
                clean &= rem.is_zero();
            }
            if !clean {
                continue;
            }
            // The pivot must divide the rest of the block; otherwise fold the
            // offending row into row t and go again.
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| !s[i][j].div_rem(&s[t][t]).1.is_zero()));
            match bad {
                Some(i) => {
                    let (head, tail) = s.split_at_mut(i);
                    for (x, y) in head[t].iter_mut().zip(&tail[0]).skip(t) {
                        *x = &*x + y;
                    }
                }
                None => break,
            }
        }
    }
    Ok((0..n).map(|i| s[i][i].monic()).filter(|p| p.degree().unwrap_or(0) > 0).collect())
}

/// Companion matrix of a monic polynomial of positive degree.
pub fn companion(p: &Poly) -> ExactMatrix {
    let k = p.degree().expect("nonzero polynomial");
    let mut rows = vec![vec![Scalar::zero(); k]; k];
    for i in 1..k {
        rows[i][i - 1] = Scalar::one();
    }
    for (i, row) in rows.iter_mut().enumerate() {
        row[k - 1] = Scalar::from(-p.coeff(i));
    }
    ExactMatrix::from_rows(rows).expect("square companion block")
}

/// Block-diagonal rational canonical form.
pub fn rational_canonical_form(m: &ExactMatrix) -> Result<ExactMatrix> {
    let factors = invariant_factors(m)?;
    let n = m.rows();
    let mut rows = vec![vec![Scalar::zero(); n]; n];
    let mut at = 0;
    for f in &factors {
        let c = companion(f);
        for i in 0..c.rows() {
            for j in 0..c.cols() {
                rows[at + i][at + j] = c.get(i, j).clone();
            }
        }
        at += c.rows();
    }
    debug_assert_eq!(at, n);
    ExactMatrix::from_rows(rows)
}

/// Whether `a` and `b` are conjugate over ℚ.
pub fn similar(a: &ExactMatrix, b: &ExactMatrix) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if !b.is_square() {
        return Err(Error::NotSquare { rows: b.rows(), cols: b.cols() });
    }
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "cannot compare a {0}x{0} matrix with a {1}x{1} matrix",
            a.rows(),
            b.rows()
        )));
    }
    Ok(invariant_factors(a)? == invariant_factors(b)?)
}
