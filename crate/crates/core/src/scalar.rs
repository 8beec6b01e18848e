//! Exact scalars: rationals extended by one formal transcendental `t`.
//!
//! A [`Scalar`] is an element of ℚ(t), the field of rational functions in a
//! single indeterminate. The indeterminate is never evaluated numerically;
//! it stands for an irrational number whose only relevant property is that
//! `1, t, t², …` are linearly independent over ℚ.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::Field;

/// Dense univariate polynomial over ℚ, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct Poly(Vec<BigRational>);

impl Poly {
    fn constant(c: BigRational) -> Self {
        let mut p = Poly(vec![c]);
        p.trim();
        p
    }

    fn one() -> Self {
        Poly(vec![BigRational::one()])
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn coeff(&self, d: usize) -> BigRational {
        self.0.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let mut p = Poly((0..len).map(|d| self.coeff(d) + other.coeff(d)).collect());
        p.trim();
        p
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::default();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    fn scale(&self, c: &BigRational) -> Poly {
        let mut p = Poly(self.0.iter().map(|a| a * c).collect());
        p.trim();
        p
    }

    fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        if rem.0.len() < divisor.0.len() {
            return (Poly::default(), rem);
        }
        let dd = divisor.degree();
        let lead_inv = divisor.lead().recip();
        let mut quot = vec![BigRational::zero(); rem.0.len() - dd];
        while !rem.is_zero() && rem.degree() >= dd {
            let shift = rem.degree() - dd;
            let factor = rem.lead() * &lead_inv;
            for (i, c) in divisor.0.iter().enumerate() {
                rem.0[shift + i] -= c * &factor;
            }
            quot[shift] = factor;
            rem.trim();
        }
        let mut q = Poly(quot);
        q.trim();
        (q, rem)
    }

    fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Rat(BigRational),
    /// Non-constant rational function; `den` monic, `gcd(num, den) = 1`.
    Frac { num: Poly, den: Poly },
}

/// An element of ℚ(t) in canonical form.
///
/// Equality is structural and coincides with equality in the field, because
/// every constructor normalizes: numerator and denominator are coprime, the
/// denominator is monic, and constants are stored as plain rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar(Repr);

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Scalar {
    pub fn rational(q: BigRational) -> Self {
        Scalar(Repr::Rat(q))
    }

    pub fn integer(n: i64) -> Self {
        Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(n))))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar(Repr::Rat(BigRational::new(BigInt::from(p), BigInt::from(q))))
    }

    /// The formal transcendental `t`.
    pub fn tau() -> Self {
        Scalar(Repr::Frac {
            num: Poly(vec![BigRational::zero(), BigRational::one()]),
            den: Poly::one(),
        })
    }

    fn from_parts(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "division by zero");
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_constant() {
            let inv = den.lead().recip();
            let num = num.scale(&inv);
            if num.is_constant() {
                return Scalar(Repr::Rat(num.lead().clone()));
            }
            return Scalar(Repr::Frac { num, den: Poly::one() });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let inv = den.lead().recip();
        let (num, den) = (num.scale(&inv), den.scale(&inv));
        if den.is_constant() && num.is_constant() {
            Scalar(Repr::Rat(num.lead().clone()))
        } else {
            Scalar(Repr::Frac { num, den })
        }
    }

    fn parts(&self) -> (Poly, Poly) {
        match &self.0 {
            Repr::Rat(q) => (Poly::constant(q.clone()), Poly::one()),
            Repr::Frac { num, den } => (num.clone(), den.clone()),
        }
    }

    /// True when the value does not involve `t`.
    pub fn is_tau_free(&self) -> bool {
        matches!(self.0, Repr::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(q) => Some(q),
            Repr::Frac { .. } => None,
        }
    }

    /// Numerator coefficients, lowest degree first (empty for zero).
    pub fn numerator_coeffs(&self) -> Vec<BigRational> {
        self.parts().0 .0
    }

    /// Monic denominator coefficients, lowest degree first.
    pub fn denominator_coeffs(&self) -> Vec<BigRational> {
        self.parts().1 .0
    }

    /// Builds `p(t)` from coefficients, lowest degree first.
    pub fn from_poly_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Poly(coeffs);
        p.trim();
        Scalar::from_parts(p, Poly::one())
    }

    pub fn pow(&self, exp: i32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc * self.clone();
        }
        if exp < 0 {
            Scalar::one() / acc
        } else {
            acc
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar(Repr::Rat(BigRational::zero()))
    }

    fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rat(q) if q.is_zero())
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar(Repr::Rat(BigRational::one()))
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self.0 {
            Repr::Rat(q) => Scalar(Repr::Rat(-q)),
            Repr::Frac { num, den } => Scalar(Repr::Frac { num: num.neg(), den }),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            _ => {
                let (an, ad) = self.parts();
                let (bn, bd) = rhs.parts();
                if ad == bd {
                    Scalar::from_parts(an.add(&bn), ad)
                } else {
                    Scalar::from_parts(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
                }
            }
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            _ => {
                let (an, ad) = self.parts();
                let (bn, bd) = rhs.parts();
                Scalar::from_parts(an.mul(&bn), ad.mul(&bd))
            }
        }
    }
}

impl Div for Scalar {
    type Output = Scalar;

    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a / b)),
            _ => {
                let (an, ad) = self.parts();
                let (bn, bd) = rhs.parts();
                Scalar::from_parts(an.mul(&bd), ad.mul(&bn))
            }
        }
    }
}

impl Field for Scalar {
    fn sign(&self) -> Option<Ordering> {
        self.as_rational().and_then(|q| q.sign())
    }

    fn from_integer(n: i64) -> Self {
        Scalar::integer(n)
    }

    fn from_rational(q: &BigRational) -> Self {
        Scalar::rational(q.clone())
    }

    fn to_rational(&self) -> Option<BigRational> {
        self.as_rational().cloned()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::integer(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::rational(q)
    }
}

fn fmt_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (d, c) in p.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        let body = match d {
            0 => mag.to_string(),
            _ => {
                let var = if d == 1 { "t".to_string() } else { format!("t^{d}") };
                if mag.is_one() {
                    var
                } else {
                    format!("{mag}*{var}")
                }
            }
        };
        match (first, negative) {
            (true, true) => write!(f, "-{body}")?,
            (true, false) => write!(f, "{body}")?,
            (false, true) => write!(f, " - {body}")?,
            (false, false) => write!(f, " + {body}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(q) => write!(f, "{q}"),
            Repr::Frac { num, den } if den.is_constant() => fmt_poly(num, f),
            Repr::Frac { num, den } => {
                write!(f, "(")?;
                fmt_poly(num, f)?;
                write!(f, ")/(")?;
                fmt_poly(den, f)?;
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar {text:?}: {reason}")]
pub struct ScalarParseError {
    pub text: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Token::Int(digits.parse().map_err(|_| "bad integer".to_string())?));
                continue;
            }
            't' => Token::T,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => return Err(format!("unexpected character {other:?}")),
        };
        out.push(tok);
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Scalar, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, String> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err("division by zero".into());
                    }
                    acc = acc / d;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, String> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar, String> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let negative = if self.peek() == Some(&Token::Minus) {
                self.pos += 1;
                true
            } else {
                false
            };
            let exp = match self.next() {
                Some(Token::Int(n)) => i32::try_from(n).map_err(|_| "exponent too large")?,
                _ => return Err("expected integer exponent".into()),
            };
            if negative && base.is_zero() {
                return Err("division by zero".into());
            }
            return Ok(base.pow(if negative { -exp } else { exp }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, String> {
        match self.next() {
            Some(Token::Int(n)) => Ok(Scalar::rational(BigRational::from_integer(n))),
            Some(Token::T) => Ok(Scalar::tau()),
            Some(Token::LParen) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(v),
                    _ => Err("unbalanced parenthesis".into()),
                }
            }
            Some(tok) => Err(format!("unexpected token {tok:?}")),
            None => Err("unexpected end of input".into()),
        }
    }
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: String| ScalarParseError { text: s.to_string(), reason };
        let tokens = tokenize(s).map_err(fail)?;
        if tokens.is_empty() {
            return Err(fail("empty".into()));
        }
        let mut p = Parser { tokens, pos: 0 };
        let v = p.expr().map_err(fail)?;
        if p.pos != p.tokens.len() {
            return Err(fail("trailing input".into()));
        }
        Ok(v)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
