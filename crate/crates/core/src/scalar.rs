//! Exact scalars: rationals, and rational functions in one indeterminate `q`.
//!
//! A [`Scalar`] keeps a canonical form: a rational function whose value is a
//! constant is always stored as [`Scalar::Rational`], so structural equality is
//! value equality and the coefficient-field tag reflects whether `q` actually
//! occurs.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ParseError;
use crate::poly::{render_terms, Poly};

/// Which coefficient field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldMode {
    Rational,
    RationalFunction,
}

/// A reduced fraction of polynomials in `q` with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc { num: Poly::zero(), den: Poly::one() };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    fn add(&self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return Self::normalize(&self.num + &rhs.num, self.den.clone());
        }
        Self::normalize(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }

    fn mul(&self, rhs: &RatFunc) -> RatFunc {
        Self::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    fn recip(&self) -> Option<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    fn from_rational(r: &BigRational) -> RatFunc {
        RatFunc { num: Poly::constant(r.clone()), den: Poly::one() }
    }

    fn render(&self) -> String {
        // Laurent polynomials (denominator q^d) print with negative exponents.
        if let Some((c, d)) = self.den.as_monomial() {
            debug_assert!(c.is_one());
            return render_terms(
                self.num.coeffs().iter().enumerate().rev().map(|(k, c)| (c, k as i64 - d as i64)),
                "q",
            );
        }
        format!("({})/({})", self.num.render("q"), self.den.render("q"))
    }
}

/// An element of ℚ or of ℚ(q).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// Never holds a constant; see the module docs.
    Function(RatFunc),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Scalar::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let one = BigRational::one();
        let f = if k >= 0 {
            RatFunc { num: Poly::monomial(one, k as usize), den: Poly::one() }
        } else {
            RatFunc { num: Poly::one(), den: Poly::monomial(one, k.unsigned_abs() as usize) }
        };
        Scalar::from_ratfunc(f)
    }

    pub fn from_ratfunc(f: RatFunc) -> Self {
        if f.is_constant() {
            Scalar::Rational(&f.num.constant_term() / &f.den.constant_term())
        } else {
            Scalar::Function(f)
        }
    }

    pub fn mode(&self) -> FieldMode {
        match self {
            Scalar::Rational(_) => FieldMode::Rational,
            Scalar::Function(_) => FieldMode::RationalFunction,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Function(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) if r.is_zero() => None,
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip())),
            Scalar::Function(f) => f.recip().map(Scalar::from_ratfunc),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn pow(&self, k: i64) -> Option<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// Substitutes a rational value for `q`; `None` if a pole is hit.
    pub fn eval_at(&self, q: &BigRational) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Function(f) => {
                let d = f.den.eval(q);
                (!d.is_zero()).then(|| f.num.eval(q) / d)
            }
        }
    }

    fn to_ratfunc(&self) -> RatFunc {
        match self {
            Scalar::Rational(r) => RatFunc::from_rational(r),
            Scalar::Function(f) => f.clone(),
        }
    }

    /// Parses the scalar grammar: integers, `a/b`, `q`, `^k` (any integer
    /// `k`), `*`, `/`, `+`, `-` and parentheses, e.g. `(q^2 + 1)/(q)` or
    /// `-3/2*q^-1`.
    pub fn parse(input: &str) -> Result<Scalar, ParseError> {
        let mut p = ScalarParser { src: input.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(v)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Function(rf) => f.write_str(&rf.render()),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::Rational(BigRational::from_integer(n))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => Scalar::from_ratfunc(self.to_ratfunc().add(&rhs.to_ratfunc())),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Rational(a), Scalar::Function(f)) | (Scalar::Function(f), Scalar::Rational(a)) => {
                if a.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::Function(RatFunc { num: f.num.scale(a), den: f.den.clone() })
                }
            }
            (Scalar::Function(a), Scalar::Function(b)) => Scalar::from_ratfunc(a.mul(b)),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like the integer types.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Function(f) => Scalar::Function(f.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_scalar {
    ($tr:ident, $m:ident, $tra:ident, $ma:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tra<&Scalar> for Scalar {
            fn $ma(&mut self, rhs: &Scalar) {
                *self = (&*self).$m(rhs);
            }
        }
    };
}
forward_scalar!(Add, add, AddAssign, add_assign);
forward_scalar!(Sub, sub, SubAssign, sub_assign);
forward_scalar!(Mul, mul, MulAssign, mul_assign);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

struct ScalarParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ScalarParser<'_> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError::new(1, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = if self.eat(b'-') { -self.term()? } else { self.term()? };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.power()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.power()?;
                acc = acc.checked_div(&d).ok_or_else(|| ParseError::new(1, at + 1, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Scalar, ParseError> {
        let base = self.primary()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let neg = self.eat(b'-');
        let k = self.integer()?;
        let k: i64 = i64::try_from(&k).map_err(|_| ParseError::new(1, at + 1, "exponent too large"))?;
        let k = if neg { -k } else { k };
        base.pow(k).ok_or_else(|| ParseError::new(1, at + 1, "negative power of zero"))
    }

    fn primary(&mut self) -> Result<Scalar, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(Scalar::q())
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::from(self.integer()?)),
            Some(_) => Err(self.error("expected a number, 'q' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_functions_collapse_to_rationals() {
        let q = Scalar::q();
        let v = &(&q * &Scalar::int(3)) / &q;
        assert_eq!(v, Scalar::int(3));
        assert_eq!(v.mode(), FieldMode::Rational);
        assert_eq!((&q - &q), Scalar::zero());
    }

    #[test]
    fn laurent_rendering() {
        let s = &Scalar::q() + &Scalar::q_pow(-1);
        assert_eq!(s.to_string(), "q + q^-1");
        assert_eq!(Scalar::q_pow(-2).to_string(), "q^-2");
        assert_eq!((-Scalar::q_pow(-1)).to_string(), "-q^-1");
        assert_eq!(Scalar::ratio(-3, 6).to_string(), "-1/2");
    }

    #[test]
    fn general_fraction_rendering() {
        let s = &Scalar::one() / &(&Scalar::q() + &Scalar::one());
        assert_eq!(s.to_string(), "(1)/(q + 1)");
        assert_eq!(Scalar::parse(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(Scalar::parse("7").unwrap(), Scalar::int(7));
        assert_eq!(Scalar::parse("-3/4").unwrap(), Scalar::ratio(-3, 4));
        assert_eq!(Scalar::parse("q^-1 + q").unwrap(), &Scalar::q() + &Scalar::q_pow(-1));
        assert_eq!(Scalar::parse("2*q^3").unwrap(), &Scalar::int(2) * &Scalar::q_pow(3));
        let f = Scalar::parse("(q^2 - 1)/(q - 1)").unwrap();
        assert_eq!(f, &Scalar::q() + &Scalar::one());
    }

    #[test]
    fn parse_errors_carry_column() {
        let e = Scalar::parse("1 + x").unwrap_err();
        assert_eq!(e.column, 5);
        let e = Scalar::parse("3/0").unwrap_err();
        assert_eq!(e.column, 2);
        assert!(Scalar::parse("(q").is_err());
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(Scalar::zero().inv().is_none());
        assert_eq!(Scalar::q().inv().unwrap(), Scalar::q_pow(-1));
    }
}
