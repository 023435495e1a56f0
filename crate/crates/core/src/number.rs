//! Exact integer and rational arithmetic.
//!
//! `Integer` is an arbitrary-precision signed integer. `Rational` wraps a
//! reduced fraction whose denominator is always positive, so two equal
//! rationals are structurally equal.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use dashu_base::{Abs, BitTest, Gcd, Signed};
use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = IBig;

/// Nonnegative gcd of two integers; `int_gcd(0, 0) == 0`.
pub fn int_gcd(a: &Integer, b: &Integer) -> Integer {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    IBig::from(a.gcd(b))
}

pub(crate) fn int_bits(a: &Integer) -> u64 {
    a.bit_len() as u64
}

pub(crate) fn int_is_negative(a: &Integer) -> bool {
    a.is_negative()
}

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(RBig);

impl Rational {
    pub fn zero() -> Self {
        Rational(RBig::ZERO)
    }

    pub fn one() -> Self {
        Rational(RBig::ONE)
    }

    /// Builds `numer / denom`, reducing. Fails when `denom` is zero.
    pub fn new(numer: Integer, denom: Integer) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(RBig::from_parts_signed(numer, denom)))
    }

    pub fn from_integer(n: Integer) -> Self {
        Rational(RBig::from(n))
    }

    /// Convenience for small literals. Panics if `denom == 0`.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Rational::new(numer.into(), denom.into()).expect("zero denominator")
    }

    pub fn numer(&self) -> &Integer {
        self.0.numerator()
    }

    /// The denominator, always positive.
    pub fn denom(&self) -> Integer {
        IBig::from(self.0.denominator().clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_int()
    }

    pub fn is_negative(&self) -> bool {
        self.0.numerator().is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.clone().abs())
    }

    /// Exact quotient, or `DivisionByZero`.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    /// Bit length of the larger of numerator and denominator.
    pub fn height_bits(&self) -> u64 {
        self.0.numerator().bit_len().max(self.0.denominator().bit_len()) as u64
    }
}

pub fn rat_add(a: &Rational, b: &Rational) -> Rational {
    a + b
}

pub fn rat_mul(a: &Rational, b: &Rational) -> Rational {
    a * b
}

pub fn rat_div(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_div(b)
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign_method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $assign_tr<&Rational> for Rational {
            fn $assign_method(&mut self, rhs: &Rational) {
                self.0.$assign_method(&rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_int() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_integer(s: &str, whole: &str) -> Result<Integer> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(whole, format!("invalid integer `{s}`")));
    }
    s.parse::<Integer>()
        .map_err(|e| Error::parse(whole, e.to_string()))
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q` with an optional sign on `p`; `q` must be an
    /// unsigned nonzero decimal integer.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.split_once('/') {
            None => Ok(Rational::from_integer(parse_integer(t, s)?)),
            Some((p, q)) => {
                let numer = parse_integer(p.trim(), s)?;
                let q = q.trim();
                if q.starts_with(['+', '-']) {
                    return Err(Error::parse(s, "denominator must be unsigned"));
                }
                let denom = parse_integer(q, s)?;
                Rational::new(numer, denom).map_err(|_| Error::parse(s, "zero denominator"))
            }
        }
    }
}
