//! Dense matrices over [`Scalar`] with exact elimination.

use std::fmt;
use std::ops::{Index, Mul};

use crate::error::{Error, ParseError, Result};
use crate::scalar::{FieldMode, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrices must have at least one row and column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer matrices. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
            .expect("well-formed integer matrix")
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| Scalar::one()).collect())
    }

    pub fn diagonal(diag: Vec<Scalar>) -> Self {
        let n = diag.len();
        let mut entries = vec![Scalar::zero(); n * n];
        for (i, d) in diag.into_iter().enumerate() {
            entries[i * n + i] = d;
        }
        ExactMatrix { rows: n, cols: n, entries }
    }

    /// `diag(q^-1, q)`, the two-dimensional normalized matrix attached to `q`.
    pub fn f_q(q: &Scalar) -> Result<Self> {
        let inv = q.inv().ok_or_else(|| Error::InvalidArgument("q must be nonzero".into()))?;
        Ok(Self::diagonal(vec![inv, q.clone()]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// `RationalFunction` if any entry involves `q`.
    pub fn mode(&self) -> FieldMode {
        if self.entries.iter().any(|e| e.mode() == FieldMode::RationalFunction) {
            FieldMode::RationalFunction
        } else {
            FieldMode::Rational
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        ExactMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::int(-1))
    }

    pub fn checked_mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(ExactMatrix { rows: self.rows, cols: rhs.cols, entries })
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn trace(&self) -> Result<Scalar> {
        self.require_square()?;
        Ok((0..self.rows).fold(Scalar::zero(), |acc, i| &acc + self.get(i, i)))
    }

    /// Row-reduces `[self | I]`. Returns the determinant and, when it is
    /// nonzero, the inverse.
    fn gauss_jordan(&self) -> Result<(Scalar, Option<ExactMatrix>)> {
        self.require_square()?;
        let n = self.rows;
        let mut a: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
                row
            })
            .collect();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok((Scalar::zero(), None));
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for x in a[col].iter_mut().skip(col) {
                *x = &*x * &inv;
            }
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if p.is_zero() {
                        continue;
                    }
                    let t = &factor * p;
                    *x = &*x - &t;
                }
            }
        }
        let entries = a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
        Ok((det, Some(ExactMatrix { rows: n, cols: n, entries })))
    }

    pub fn determinant(&self) -> Result<Scalar> {
        Ok(self.gauss_jordan()?.0)
    }

    /// Exact inverse; a zero determinant is reported as [`Error::Singular`].
    pub fn inverse(&self) -> Result<ExactMatrix> {
        self.gauss_jordan()?.1.ok_or(Error::Singular)
    }

    /// Parses the matrix file format: a `<rows> <cols>` header followed by one
    /// line per row of whitespace-separated scalar entries. Blank lines and
    /// lines starting with `#` are ignored.
    pub fn parse(text: &str) -> std::result::Result<ExactMatrix, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| ParseError::new(1, 1, "missing '<rows> <cols>' header"))?;
        let dims: Vec<(usize, &str)> = tokens(header).collect();
        if dims.len() != 2 {
            return Err(ParseError::new(hline, 1, "header must be '<rows> <cols>'"));
        }
        let mut size = [0usize; 2];
        for (k, (col, tok)) in dims.iter().enumerate() {
            size[k] = tok.parse().ok().filter(|&v: &usize| v > 0).ok_or_else(|| {
                ParseError::new(hline, col + 1, format!("expected a positive integer, found '{tok}'"))
            })?;
        }
        let [rows, cols] = size;
        let mut entries = Vec::with_capacity(rows * cols);
        let mut last_line = hline;
        for r in 0..rows {
            let (lno, line) = lines
                .next()
                .ok_or_else(|| ParseError::new(last_line + 1, 1, format!("expected {rows} rows, found {r}")))?;
            last_line = lno;
            let toks: Vec<(usize, &str)> = tokens(line).collect();
            if toks.len() != cols {
                return Err(ParseError::new(lno, 1, format!("expected {cols} entries, found {}", toks.len())));
            }
            for (col, tok) in toks {
                entries.push(Scalar::parse(tok).map_err(|e| e.offset(lno, col))?);
            }
        }
        if let Some((lno, _)) = lines.next() {
            return Err(ParseError::new(lno, 1, "unexpected extra row"));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    /// Renders in the file format accepted by [`ExactMatrix::parse`].
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(render_entry).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Entries in a file may not contain spaces.
fn render_entry(s: &Scalar) -> String {
    match s {
        Scalar::Rational(_) => s.to_string(),
        Scalar::Function(f) => format!(
            "({})/({})",
            f.numerator().render("q").replace(' ', ""),
            f.denominator().render("q").replace(' ', "")
        ),
    }
}

/// Whitespace-separated tokens with their 0-based byte columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_ascii_whitespace().map(move |t| (t.as_ptr() as usize - line.as_ptr() as usize, t))
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        self.get(i, j)
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    /// Panics on incompatible shapes; see [`ExactMatrix::checked_mul`].
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).expect("matrix shapes compatible")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
