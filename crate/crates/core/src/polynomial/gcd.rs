//! Polynomial gcd and the minimal-degree extended gcd, computed with
//! primitive pseudo-remainder sequences over the integers.

use super::{zpoly, Polynomial};
use crate::error::{Error, Result};
use crate::number::{int_bits, int_gcd, int_is_negative, Integer, Rational};
use crate::trace::BitTrace;

/// Output of [`poly_ext_gcd`]: `u * a + v * b == gcd`, with `gcd` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtGcd {
    pub gcd: Polynomial,
    pub u: Polynomial,
    pub v: Polynomial,
}

/// Monic gcd. `poly_gcd(a, 0)` is `a` made monic; both zero is an error.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    gcd_traced(a, b, &mut BitTrace::new())
}

pub(crate) fn gcd_traced(a: &Polynomial, b: &Polynomial, trace: &mut BitTrace) -> Result<Polynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, za) = zpoly::split(a);
    let (_, zb) = zpoly::split(b);
    let (mut r0, mut r1) = if za.len() >= zb.len() { (za, zb) } else { (zb, za) };
    while !r1.is_empty() {
        let (_, _, mut r) = zpoly::pseudo_divrem(&r0, &r1, false);
        trace.observe_bits(zpoly::max_bits(&r));
        zpoly::make_primitive(&mut r);
        r0 = r1;
        r1 = r;
    }
    zpoly::to_polynomial(&r0).make_monic()
}

/// Extended gcd returning the unique Bézout pair with
/// `deg u < deg b - deg gcd` and, when `deg b > deg gcd`, `deg v < deg a - deg gcd`.
pub fn poly_ext_gcd(a: &Polynomial, b: &Polynomial) -> Result<ExtGcd> {
    ext_gcd_traced(a, b, &mut BitTrace::new())
}

pub(crate) fn ext_gcd_traced(a: &Polynomial, b: &Polynomial, trace: &mut BitTrace) -> Result<ExtGcd> {
    match (a.leading_coeff(), b.leading_coeff()) {
        (None, None) => return Err(Error::ZeroPolynomial),
        (Some(lc), None) => {
            return Ok(ExtGcd {
                gcd: a.make_monic()?,
                u: Polynomial::constant(lc.recip()?),
                v: Polynomial::zero(),
            })
        }
        (None, Some(lc)) => {
            return Ok(ExtGcd {
                gcd: b.make_monic()?,
                u: Polynomial::zero(),
                v: Polynomial::constant(lc.recip()?),
            })
        }
        (Some(_), Some(_)) => {}
    }

    // Primitive remainder sequence over the integers with the cofactor of `a`
    // kept as s_i / d_i: d_i * r_i == s_i * za + t_i * zb, where t_i is never formed.
    let (ca, za) = zpoly::split(a);
    let (_, zb) = zpoly::split(b);
    let (mut r0, mut s0, mut d0) = (za, vec![Integer::ONE], Integer::ONE);
    let (mut r1, mut s1, mut d1) = (zb, Vec::new(), Integer::ONE);
    while !r1.is_empty() {
        let (alpha, q, mut r) = zpoly::pseudo_divrem(&r0, &r1, true);
        trace.observe_bits(zpoly::max_bits(&r));
        let c = zpoly::make_primitive(&mut r);
        // alpha * r0 - q * r1 == c * r
        let mut s = zpoly::lin_comb(&(&alpha * &d1), &s0, &zpoly::scaled(&q, &d0), &s1);
        let mut d = c * &d0 * &d1;
        let g = int_gcd(&zpoly::content(&s), &d);
        if !g.is_zero() && !g.is_one() {
            s.iter_mut().for_each(|x| *x /= &g);
            d /= &g;
        }
        if int_is_negative(&d) {
            s.iter_mut().for_each(|x| *x = -&*x);
            d = -d;
        }
        trace.observe_bits(zpoly::max_bits(&s).max(int_bits(&d)));
        (r0, s0, d0) = (r1, s1, d1);
        (r1, s1, d1) = (r, s, d);
    }
    let lc = Rational::from(r0.last().expect("gcd is nonzero").clone());
    let gcd = zpoly::to_polynomial(&r0).scale(&lc.recip()?);
    let s1 = zpoly::to_polynomial(&s0).scale(&(Rational::from(d0) * &lc * ca).recip()?);

    // Reduce u modulo b/gcd, then solve for v exactly.
    let b_cofactor = b.exact_div(&gcd)?;
    let u = s1.rem(&b_cofactor)?;
    let v = (&gcd - &(&u * a)).exact_div(b)?;
    trace.observe(&u);
    trace.observe(&v);
    Ok(ExtGcd { gcd, u, v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::strategies::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            poly_gcd(&p("x^4 - 4*x + 3"), &p("4*x^3 - 4")).unwrap(),
            p("x - 1")
        );
        assert_eq!(
            poly_gcd(&p("3*x^2 - 6"), &Polynomial::zero()).unwrap(),
            p("x^2 - 2")
        );
        assert_eq!(poly_gcd(&Polynomial::zero(), &p("-2*x")).unwrap(), p("x"));
        // x^2 + 2x + 3 = (x - 1)(x + 3) + 6, then gcd(x - 1, 6) is a unit.
        let (_, r) = p("x^2 + 2*x + 3").divrem(&p("x - 1")).unwrap();
        assert_eq!(r, p("6"));
        assert_eq!(
            poly_gcd(&p("x^2 + 2*x + 3"), &p("x - 1")).unwrap(),
            Polynomial::one()
        );
        assert_eq!(
            poly_gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn ext_gcd_examples() {
        let e = poly_ext_gcd(&p("3*x^2 + 2*x + 1"), &p("x^3 + x^2 + x - 3")).unwrap();
        assert_eq!(e.gcd, Polynomial::one());
        assert_eq!(e.u, p("1/72*x^2 + 1/9*x + 1/24"));
        assert_eq!(e.v, p("-1/24*x - 23/72"));

        let f = p("x^3 - 5*x + 1/2");
        let e = poly_ext_gcd(&Polynomial::one(), &f).unwrap();
        assert_eq!(
            (e.gcd, e.u, e.v),
            (Polynomial::one(), Polynomial::one(), Polynomial::zero())
        );

        let e = poly_ext_gcd(&p("x"), &p("x^2")).unwrap();
        assert_eq!((e.gcd, e.u, e.v), (p("x"), Polynomial::one(), Polynomial::zero()));
    }

    #[test]
    fn ext_gcd_with_zero_operand() {
        let e = poly_ext_gcd(&p("2*x + 4"), &Polynomial::zero()).unwrap();
        assert_eq!((e.gcd, e.u, e.v), (p("x + 2"), p("1/2"), Polynomial::zero()));
        assert_eq!(
            poly_ext_gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    /// Monic Euclid over the rationals, the textbook formulation.
    fn oracle_ext_gcd(a: &Polynomial, b: &Polynomial) -> ExtGcd {
        let lc_a = a.leading_coeff().unwrap().recip().unwrap();
        let lc_b = b.leading_coeff().unwrap().recip().unwrap();
        let (mut r0, mut s0) = (a.scale(&lc_a), Polynomial::constant(lc_a));
        let (mut r1, mut s1) = (b.scale(&lc_b), Polynomial::zero());
        loop {
            let (q, r) = r0.divrem(&r1).unwrap();
            let Some(lc) = r.leading_coeff() else { break };
            let inv = lc.recip().unwrap();
            let s2 = (&s0 - &(&q * &s1)).scale(&inv);
            (r0, s0) = (r1, s1);
            (r1, s1) = (r.scale(&inv), s2);
        }
        let u = s1.rem(&b.exact_div(&r1).unwrap()).unwrap();
        let v = (&r1 - &(&u * a)).exact_div(b).unwrap();
        ExtGcd { gcd: r1, u, v }
    }

    fn check_bezout(a: &Polynomial, b: &Polynomial) -> Result<(), TestCaseError> {
        let e = poly_ext_gcd(a, b).unwrap();
        prop_assert_eq!(&(&e.u * a) + &(&e.v * b), e.gcd.clone());
        prop_assert!(e.gcd.is_monic());
        prop_assert_eq!(&e.gcd, &poly_gcd(a, b).unwrap());
        let dg = e.gcd.degree().unwrap();
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert!(e.u.degree() < Some(db - dg));
            // When a and b are both associates of the gcd no pair meets both strict bounds.
            if db > dg {
                prop_assert!(e.v.degree() < Some(da - dg));
            }
        }
        Ok(())
    }

    proptest! {
        #[test]
        fn gcd_divides_and_is_greatest(a in nonzero_poly(5), b in nonzero_poly(5), c in nonzero_poly(3)) {
            let ca = &c * &a;
            let cb = &c * &b;
            let g = poly_gcd(&ca, &cb).unwrap();
            prop_assert!(g.divides(&ca).unwrap());
            prop_assert!(g.divides(&cb).unwrap());
            prop_assert!(c.make_monic().unwrap().divides(&g).unwrap());
        }

        #[test]
        fn ext_gcd_matches_rational_euclid(a in nonzero_poly(6), b in nonzero_poly(6), c in poly(3)) {
            let c = if c.is_zero() { Polynomial::one() } else { c };
            let (a, b) = (&c * &a, &c * &b);
            let want = oracle_ext_gcd(&a, &b);
            prop_assert_eq!(&poly_gcd(&a, &b).unwrap(), &want.gcd);
            prop_assert_eq!(poly_ext_gcd(&a, &b).unwrap(), want);
        }

        #[test]
        fn bezout_identity(a in poly(6), b in poly(6)) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            check_bezout(&a, &b)?;
        }

        #[test]
        fn bezout_identity_with_common_factor(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
            check_bezout(&(&c * &a), &(&c * &b))?;
        }
    }
}
