//! Exact arithmetic over the Gaussian rationals ℚ(i).
//!
//! The arithmetic is malachite's [`Complex`] over [`Rational`]; both parts
//! are kept in lowest terms with a positive denominator, so structural
//! equality is numeric equality. This module adds the text format
//!
//! ```text
//! scalar := real | imag | real sign imag
//! real   := rat
//! imag   := [rat] "i"          (a bare "-i" is accepted)
//! rat    := ["-"] digits ["/" digits-nonzero]
//! sign   := "+" | "-"
//! ```
//!
//! with whitespace allowed between tokens. [`fmt::Display`] renders the
//! canonical form, which always parses back to the same value.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{Abs, AbsSquared, Conjugate, Reciprocal};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::gaussian_rational::GaussianRational as Complex;
use malachite_q::Rational;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational(Complex);

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational(Complex { real: re, imaginary: im })
    }

    pub fn zero() -> Self {
        GaussianRational(Complex::ZERO)
    }

    pub fn one() -> Self {
        GaussianRational(Complex::ONE)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rational::ZERO, Rational::ONE)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(Rational::from(n), Rational::ZERO)
    }

    /// `num/den` as a real number. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(Rational::from_signeds(num, den), Rational::ZERO)
    }

    /// `re + im·i` from two `(numerator, denominator)` pairs.
    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(Rational::from_signeds(re.0, re.1), Rational::from_signeds(im.0, im.1))
    }

    pub fn re(&self) -> &Rational {
        &self.0.real
    }

    pub fn im(&self) -> &Rational {
        &self.0.imaginary
    }

    pub fn is_zero(&self) -> bool {
        self.0 == Complex::ZERO
    }

    pub fn is_one(&self) -> bool {
        self.0 == Complex::ONE
    }

    pub fn is_real(&self) -> bool {
        self.0.imaginary == Rational::ZERO
    }

    pub fn conj(&self) -> Self {
        GaussianRational((&self.0).conjugate())
    }

    /// |z|², a nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        (&self.0).abs_squared()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(GaussianRational((&self.0).reciprocal()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(GaussianRational(&self.0 / &rhs.0))
    }
}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::new(re, Rational::ZERO)
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational(&self.0 + &rhs.0)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational(&self.0 - &rhs.0)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_zero() || rhs.is_zero() {
            return GaussianRational::zero();
        }
        GaussianRational(&self.0 * &rhs.0)
    }
}

/// Panics on a zero divisor; use [`GaussianRational::checked_div`] otherwise.
impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $tr<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational(-self.0)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational(-&self.0)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re(), self.im());
        if *im == 0u32 {
            return write!(f, "{re}");
        }
        let negative = *im < 0u32;
        if *re != 0u32 {
            write!(f, "{re}{}", if negative { "-" } else { "+" })?;
        } else if negative {
            f.write_str("-")?;
        }
        let mag = im.abs();
        if mag != 1u32 {
            write!(f, "{mag}")?;
        }
        f.write_str("i")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Digits(Rational),
    Slash,
    Minus,
    Plus,
    I,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => pos += 1,
            b'/' => {
                out.push((pos, Token::Slash));
                pos += 1;
            }
            b'-' => {
                out.push((pos, Token::Minus));
                pos += 1;
            }
            b'+' => {
                out.push((pos, Token::Plus));
                pos += 1;
            }
            b'i' => {
                out.push((pos, Token::I));
                pos += 1;
            }
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let n: Rational = text[start..pos].parse().expect("ascii digits");
                out.push((start, Token::Digits(n)));
            }
            _ => {
                return Err(Error::Parse {
                    offset: pos,
                    message: format!("unexpected character {:?}", text[pos..].chars().next().unwrap()),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: &str) -> Result<T> {
        Err(Error::Parse {
            offset: self.offset(),
            message: message.to_string(),
        })
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// `digits ["/" digits-nonzero]`, sign already consumed.
    fn unsigned_rat(&mut self) -> Result<Rational> {
        let num = match self.peek() {
            Some(Token::Digits(n)) => n.clone(),
            _ => return self.error("expected digits"),
        };
        self.pos += 1;
        if !self.eat(&Token::Slash) {
            return Ok(num);
        }
        let den = match self.peek() {
            Some(Token::Digits(d)) => d.clone(),
            _ => return self.error("expected denominator digits"),
        };
        if den == 0u32 {
            return self.error("zero denominator");
        }
        self.pos += 1;
        Ok(num / den)
    }

    /// `[rat] "i"` or `rat`; returns the value and whether it was imaginary.
    fn term(&mut self) -> Result<(Rational, bool)> {
        let negative = self.eat(&Token::Minus);
        let sign = |q: Rational| if negative { -q } else { q };
        if self.eat(&Token::I) {
            return Ok((sign(Rational::ONE), true));
        }
        let q = sign(self.unsigned_rat()?);
        Ok((q.clone(), self.eat(&Token::I)))
    }

    fn scalar(&mut self) -> Result<GaussianRational> {
        if self.tokens.is_empty() {
            return self.error("empty scalar");
        }
        let (first, first_imag) = self.term()?;
        if first_imag {
            self.finish()?;
            return Ok(GaussianRational::new(Rational::ZERO, first));
        }
        let negate = match self.peek() {
            None => return Ok(GaussianRational::new(first, Rational::ZERO)),
            Some(Token::Plus) => false,
            Some(Token::Minus) => true,
            _ => return self.error("expected '+', '-' or end of input"),
        };
        self.pos += 1;
        let (second, second_imag) = self.term()?;
        if !second_imag {
            return self.error("expected imaginary part ending in 'i'");
        }
        self.finish()?;
        let im = if negate { -second } else { second };
        Ok(GaussianRational::new(first, im))
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.tokens.len() {
            self.error("trailing input")
        } else {
            Ok(())
        }
    }
}

/// Parses the canonical scalar grammar (see module docs).
pub fn parse_scalar(text: &str) -> Result<GaussianRational> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    p.scalar()
}

impl FromStr for GaussianRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> GaussianRational {
        t.parse().unwrap()
    }

    #[test]
    fn conjugate_product_is_real() {
        let a = GaussianRational::from_parts((1, 1), (1, 1));
        assert_eq!(&a * &a.conj(), GaussianRational::from_integer(2));
    }

    #[test]
    fn i_squared() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_integer(-1));
    }

    #[test]
    fn rational_inverse() {
        let x = GaussianRational::from_ratio(2, 3);
        assert_eq!(x.inverse().unwrap(), GaussianRational::from_ratio(3, 2));
        let z = s("1+2i");
        assert!((&z * &z.inverse().unwrap()).is_one());
    }

    #[test]
    fn zero_divisor() {
        let z = GaussianRational::zero();
        assert_eq!(z.inverse(), Err(Error::DivisionByZero));
        assert_eq!(GaussianRational::one().checked_div(&z), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_zero() {
        let z = &s("1/2-i") - &s("2/4 - 1i");
        assert!(z.is_zero());
        assert_eq!(z, GaussianRational::zero());
        assert_eq!(z.re(), &Rational::ZERO);
    }

    #[test]
    fn lowest_terms() {
        let x = s("6/8");
        assert_eq!(x.re(), &Rational::from_signeds(3, 4));
        assert_eq!(x.to_string(), "3/4");
        let y = s("-6/8i");
        assert_eq!(y.im(), &Rational::from_signeds(-3, 4));
        assert_eq!(y.to_string(), "-3/4i");
    }

    #[test]
    fn parse_examples() {
        assert_eq!(s("1/2"), GaussianRational::from_ratio(1, 2));
        assert_eq!(s("-i"), GaussianRational::from_parts((0, 1), (-1, 1)));
        assert_eq!(s("2/3-5/7i"), GaussianRational::from_parts((2, 3), (-5, 7)));
        assert_eq!(s(" 1 + i "), GaussianRational::from_parts((1, 1), (1, 1)));
        assert_eq!(s("3i"), GaussianRational::from_parts((0, 1), (3, 1)));
        assert_eq!(s("-4/6"), GaussianRational::from_ratio(-2, 3));
        assert_eq!(s("0"), GaussianRational::zero());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let cases = [
            ("", 0),
            ("1/0", 2),
            ("1x", 1),
            ("1+2", 3),
            ("i+1", 1),
            ("1+i+i", 3),
            ("/2", 0),
            ("1/", 2),
        ];
        for (text, offset) in cases {
            match parse_scalar(text) {
                Err(Error::Parse { offset: o, .. }) => assert_eq!(o, offset, "{text:?}"),
                other => panic!("{text:?} parsed as {other:?}"),
            }
        }
    }

    #[test]
    fn render() {
        let cases = ["0", "1/2", "-3", "i", "-i", "5/7i", "2/3-5/7i", "1+i", "-1/2+3i"];
        for c in cases {
            assert_eq!(s(c).to_string(), c);
        }
    }
}
