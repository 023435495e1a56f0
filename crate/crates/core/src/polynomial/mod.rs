//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest power first. The vector is empty for the
//! zero polynomial and otherwise ends in a nonzero coefficient, so equality
//! is structural. The degree of zero is `None`, which orders below every
//! `Some(d)` and behaves as minus infinity in comparisons.

mod gcd;
mod text;
mod zpoly;

pub(crate) use gcd::{ext_gcd_traced, gcd_traced};
pub use gcd::{poly_ext_gcd, poly_gcd, ExtGcd};

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::number::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// Coordinates of a polynomial of degree `< s` in the basis `1, X, ..., X^(s-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateVector(Vec<Rational>);

impl CoordinateVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        CoordinateVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        CoordinateVector(vec![Rational::zero(); len])
    }

    /// The `i`-th standard basis vector of length `len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }
}

impl Polynomial {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * X^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// `X - root`.
    pub fn linear_factor(root: Rational) -> Self {
        Self::from_coeffs(vec![-root, Rational::one()])
    }

    /// From coefficients, lowest power first. Trailing zeros are dropped.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Polynomial { coeffs }.normalize()
    }

    /// From small integer coefficients, lowest power first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn from_coords(v: &CoordinateVector) -> Self {
        Self::from_coeffs(v.entries().to_vec())
    }

    /// Coordinates in the basis `1, X, ..., X^(s-1)`.
    pub fn coords(&self, s: usize) -> Result<CoordinateVector> {
        if let Some(d) = self.degree() {
            if d >= s {
                return Err(Error::DegreeViolation { found: d, bound: s });
            }
        }
        let mut entries = self.coeffs.clone();
        entries.resize(s, Rational::zero());
        Ok(CoordinateVector(entries))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0. Only for size bookkeeping.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for zero and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Rational::is_one)
    }

    /// True when every coefficient has denominator 1.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn height_bits(&self) -> u64 {
        self.coeffs.iter().map(Rational::height_bits).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn make_monic(&self) -> Result<Polynomial> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        Ok(self.scale(&lc.recip()?))
    }

    pub fn derivative(&self) -> Polynomial {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i as i64))
                .collect(),
        )
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let (db, lc) = match (b.degree(), b.leading_coeff()) {
            (Some(d), Some(lc)) => (d, lc),
            _ => return Err(Error::DivisionByZero),
        };
        let Some(da) = self.degree().filter(|&da| da >= db) else {
            return Ok((Polynomial::zero(), self.clone()));
        };
        let lc_inv = lc.recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let top = &rem[i + db];
            if top.is_zero() {
                continue;
            }
            let q = top * &lc_inv;
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    rem[i + j] -= &(&q * bj);
                }
            }
            quot[i] = q;
        }
        rem.truncate(db);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, b: &Polynomial) -> Result<Polynomial> {
        Ok(self.divrem(b)?.1)
    }

    /// Quotient of an exact division; a nonzero remainder is an error.
    pub fn exact_div(&self, b: &Polynomial) -> Result<Polynomial> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (ca, za) = zpoly::split(self);
        let (cb, zb) = zpoly::split(b);
        if let Some(zq) = zpoly::exact_quotient(&za, &zb) {
            return Ok(zpoly::to_polynomial(&zq).scale(&ca.checked_div(&cb)?));
        }
        let (_, r) = self.divrem(b)?;
        Err(Error::InexactDivision {
            remainder: r.to_string(),
        })
    }

    pub fn divides(&self, other: &Polynomial) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(acc * x) + c)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let (ca, za) = zpoly::split(self);
        let (cb, zb) = zpoly::split(rhs);
        zpoly::to_polynomial(&zpoly::mul(&za, &zb)).scale(&(ca * cb))
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

pub fn poly_add(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a + b
}

pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a * b
}

pub fn poly_divrem(a: &Polynomial, b: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    a.divrem(b)
}

pub fn poly_exact_div(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.exact_div(b)
}

pub fn derivative(a: &Polynomial) -> Polynomial {
    a.derivative()
}

pub fn make_monic(a: &Polynomial) -> Result<Polynomial> {
    a.make_monic()
}

pub fn poly_eval(a: &Polynomial, x: &Rational) -> Rational {
    a.eval(x)
}


#[cfg(test)]
mod tests {
    use super::strategies::*;
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert!(Polynomial::zero().degree() < Polynomial::one().degree());
        assert_eq!(Polynomial::from_ints(&[0, 0, 0]), Polynomial::zero());
    }

    #[test]
    fn add_examples() {
        assert_eq!(poly_add(&p("x - 1"), &Polynomial::one()), p("x"));
        assert_eq!(poly_add(&p("x^3 - 2"), &Polynomial::zero()), p("x^3 - 2"));
        assert_eq!(poly_add(&p("x^2 + 2*x + 3"), &p("x - 1")), p("x^2 + 3*x + 2"));
    }

    #[test]
    fn mul_examples() {
        let f = p("x^4 - 4*x + 3");
        assert_eq!(poly_mul(&p("x^2 + 2*x + 3"), &p("x - 1").pow(2)), f);
        assert_eq!(poly_mul(&f, &Polynomial::one()), f);
        assert_eq!(poly_mul(&f, &Polynomial::zero()), Polynomial::zero());
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = poly_divrem(&p("x^4 - 4*x + 3"), &p("x - 1")).unwrap();
        assert_eq!((q, r), (p("x^3 + x^2 + x - 3"), Polynomial::zero()));
        let f = p("1/2*x^3 - 7");
        assert_eq!(
            poly_divrem(&f, &Polynomial::one()).unwrap(),
            (f.clone(), Polynomial::zero())
        );
        assert_eq!(
            poly_divrem(&p("x^2 + 1"), &p("x")).unwrap(),
            (p("x"), Polynomial::one())
        );
        assert_eq!(poly_divrem(&f, &Polynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(
            poly_exact_div(&p("x^4 - 4*x + 3"), &p("x - 1")).unwrap(),
            p("x^3 + x^2 + x - 3")
        );
        let f = p("3*x^2 - 1/5");
        assert_eq!(poly_exact_div(&f, &f).unwrap(), Polynomial::one());
        assert_eq!(poly_exact_div(&p("x^2 - 1"), &p("x + 1")).unwrap(), p("x - 1"));
        assert!(matches!(
            poly_exact_div(&p("x^2 + 1"), &p("x")),
            Err(Error::InexactDivision { .. })
        ));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(derivative(&p("x^4 - 4*x + 3")), p("4*x^3 - 4"));
        assert_eq!(derivative(&p("17/3")), Polynomial::zero());
        assert_eq!(derivative(&p("x^3 + x^2 + x - 3")), p("3*x^2 + 2*x + 1"));
    }

    #[test]
    fn make_monic_examples() {
        assert_eq!(make_monic(&p("4*x^3 - 4")).unwrap(), p("x^3 - 1"));
        assert_eq!(make_monic(&p("x^2 - 1/3")).unwrap(), p("x^2 - 1/3"));
        assert_eq!(make_monic(&p("5")).unwrap(), Polynomial::one());
        assert_eq!(make_monic(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly_eval(&p("x^4 - 4*x + 3"), &Rational::one()), Rational::zero());
        assert_eq!(
            poly_eval(&p("x^4 - 4*x + 3"), &Rational::zero()),
            Rational::from(3)
        );
        assert_eq!(
            poly_eval(&p("1/6*x^2 + 1/3*x + 3/2"), &Rational::one()),
            Rational::from(2)
        );
    }

    #[test]
    fn coords_respect_dimension() {
        let v = p("x + 2").coords(3).unwrap();
        assert_eq!(
            v.entries(),
            &[Rational::from(2), Rational::one(), Rational::zero()]
        );
        assert_eq!(Polynomial::from_coords(&v), p("x + 2"));
        assert_eq!(
            p("x^3").coords(3),
            Err(Error::DegreeViolation { found: 3, bound: 3 })
        );
        assert_eq!(Polynomial::zero().coords(2).unwrap(), CoordinateVector::zeros(2));
    }

    /// Schoolbook product directly over the rationals.
    fn schoolbook(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut out = vec![Rational::zero(); (a.coeffs().len() + b.coeffs().len()).saturating_sub(1)];
        for (i, x) in a.coeffs().iter().enumerate() {
            for (j, y) in b.coeffs().iter().enumerate() {
                out[i + j] += &(x * y);
            }
        }
        Polynomial::from_coeffs(out)
    }

    proptest! {
        #[test]
        fn product_matches_schoolbook(a in poly(8), b in poly(8)) {
            prop_assert_eq!(&a * &b, schoolbook(&a, &b));
        }

        #[test]
        fn exact_div_inverts_product(a in poly(8), b in nonzero_poly(6)) {
            prop_assert_eq!(schoolbook(&a, &b).exact_div(&b).unwrap(), a.clone());
            let (q, r) = a.divrem(&b).unwrap();
            if !r.is_zero() {
                let e = a.exact_div(&b).unwrap_err();
                prop_assert_eq!(e, Error::InexactDivision { remainder: r.to_string() });
            } else {
                prop_assert_eq!(a.exact_div(&b).unwrap(), q);
            }
        }

        #[test]
        fn divrem_round_trip(a in poly(8), b in nonzero_poly(5)) {
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn derivative_is_linear_and_leibniz(a in poly(6), b in poly(6), c in small_rational()) {
            prop_assert_eq!((&a + &b.scale(&c)).derivative(), &a.derivative() + &b.derivative().scale(&c));
            prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
        }

        #[test]
        fn product_degree_adds(a in nonzero_poly(6), b in nonzero_poly(6)) {
            prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }

        #[test]
        fn eval_is_a_ring_morphism(a in poly(5), b in poly(5), x in small_rational()) {
            prop_assert_eq!((&a * &b).eval(&x), &a.eval(&x) * &b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), &a.eval(&x) + &b.eval(&x));
        }
    }
}
