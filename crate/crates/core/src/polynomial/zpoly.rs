//! Integer-coefficient polynomials used inside the gcd kernels.
//!
//! Remainder sequences over the rationals pay a bignum gcd on every
//! coefficient operation to stay in lowest terms. Clearing denominators once
//! and running a primitive pseudo-remainder sequence over the integers does
//! the same work with one content gcd per step.

use super::Polynomial;
use crate::number::{int_bits, int_gcd, int_is_negative, Integer, Rational};

/// Lowest power first, no trailing zeros.
pub(crate) type ZPoly = Vec<Integer>;

fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(Integer::is_zero) {
        p.pop();
    }
}

/// Nonnegative gcd of the coefficients; zero for the zero polynomial.
pub(crate) fn content(p: &[Integer]) -> Integer {
    let mut g = Integer::ZERO;
    for c in p {
        g = int_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Splits `p` as `factor * z` with `z` primitive and a positive leading coefficient.
pub(crate) fn split(p: &Polynomial) -> (Rational, ZPoly) {
    let lcm = p.coeffs().iter().fold(Integer::ONE, |l, c| {
        let d = c.denom();
        let g = int_gcd(&l, &d);
        l / g * d
    });
    let mut z: ZPoly = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut g = content(&z);
    if g.is_zero() {
        return (Rational::one(), z);
    }
    if z.last().is_some_and(int_is_negative) {
        g = -g;
    }
    for c in &mut z {
        *c /= &g;
    }
    let factor = Rational::new(g, lcm).expect("lcm of denominators is positive");
    (factor, z)
}

/// Divides out the content and fixes the sign of the leading coefficient.
/// Returns the divisor used, so `p_before == c * p_after`.
pub(crate) fn make_primitive(p: &mut ZPoly) -> Integer {
    let mut g = content(p);
    if g.is_zero() {
        return Integer::ONE;
    }
    if p.last().is_some_and(int_is_negative) {
        g = -g;
    }
    if !g.is_one() {
        for c in p.iter_mut() {
            *c /= &g;
        }
    }
    g
}

pub(crate) fn to_polynomial(p: &[Integer]) -> Polynomial {
    Polynomial::from_coeffs(p.iter().cloned().map(Rational::from).collect())
}

pub(crate) fn max_bits(p: &[Integer]) -> u64 {
    p.iter().map(int_bits).max().unwrap_or(0)
}

/// Pseudo-division: returns `(alpha, q, r)` with `alpha * a == q * b + r` and
/// `deg r < deg b`. `alpha` is a product of divisors of powers of `lc(b)`.
/// The quotient is only accumulated when `want_quotient` is set.
pub(crate) fn pseudo_divrem(a: &[Integer], b: &[Integer], want_quotient: bool) -> (Integer, ZPoly, ZPoly) {
    let lb = b.last().expect("pseudo-division by zero");
    let mut r: ZPoly = a.to_vec();
    let mut q: ZPoly = Vec::new();
    if want_quotient && a.len() >= b.len() {
        q = vec![Integer::ZERO; a.len() - b.len() + 1];
    }
    let mut alpha = Integer::ONE;
    while r.len() >= b.len() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        let g = int_gcd(lb, &lr);
        let (m1, m2) = (lb / &g, lr / g);
        if !m1.is_one() {
            for c in r.iter_mut() {
                *c *= &m1;
            }
            for c in q.iter_mut() {
                *c *= &m1;
            }
            alpha *= &m1;
        }
        if want_quotient {
            q[shift] += &m2;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &m2 * bc;
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (alpha, q, r)
}

pub(crate) fn scaled(p: &[Integer], c: &Integer) -> ZPoly {
    p.iter().map(|x| x * c).collect()
}

pub(crate) fn mul(a: &[Integer], b: &[Integer]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out: ZPoly = vec![Integer::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Quotient of `a` by `b` over the integers, or `None` if some step leaves a
/// leading coefficient not divisible by `lc(b)` or a nonzero remainder.
/// For primitive `a` and `b` this succeeds exactly when `b` divides `a` in Q[x].
pub(crate) fn exact_quotient(a: &[Integer], b: &[Integer]) -> Option<ZPoly> {
    let lb = b.last().expect("division by zero");
    if a.len() < b.len() {
        return a.is_empty().then(Vec::new);
    }
    let mut r: ZPoly = a.to_vec();
    let mut q: ZPoly = vec![Integer::ZERO; a.len() - b.len() + 1];
    for shift in (0..q.len()).rev() {
        let top = &r[shift + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        if !(top % lb).is_zero() {
            return None;
        }
        let qc = top / lb;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &qc * bc;
        }
        q[shift] = qc;
    }
    r.iter().all(Integer::is_zero).then_some(q)
}

/// `x * a - y * b` for integer polynomials.
pub(crate) fn lin_comb(x: &Integer, a: &[Integer], y: &[Integer], b: &[Integer]) -> ZPoly {
    let len = a.len().max(if y.is_empty() || b.is_empty() {
        0
    } else {
        y.len() + b.len() - 1
    });
    let mut out: ZPoly = vec![Integer::ZERO; len];
    for (o, c) in out.iter_mut().zip(a) {
        *o = x * c;
    }
    for (i, yc) in y.iter().enumerate() {
        if yc.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            out[i + j] -= yc * bc;
        }
    }
    trim(&mut out);
    out
}
