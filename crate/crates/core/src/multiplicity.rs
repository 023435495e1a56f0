//! The multiplicity polynomial `M_f`.
//!
//! For monic `f` with square-free part `f0 = f / gcd(f, f')`, `M_f` is the
//! unique polynomial of degree `< deg f0` that takes the value `m(a)` at every
//! root `a` of `f`, where `m(a)` is the multiplicity of `a`. It is computed
//! without touching roots:
//!
//! * `P = f' / gcd(f, f')`, which is the remainder of `M_f * f0'` modulo `f0`;
//! * `g` with `f0' g + f0 h = 1` and `deg g < deg f0`;
//! * `[M_f] = P(C_f0) [g]`, the companion route, or equivalently
//!   `M_f = P g mod f0`, the modular route.
//!
//! `M_f(C_f0)` is similar to the diagonal matrix of multiplicities, so its
//! characteristic polynomial is `prod_k (X - k)^deg(P_k)`; reading off the
//! exponents forecasts the shape of the square-free factorization.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::{apply_to_vector, char_poly, eval_at_companion, RationalMatrix};
use crate::number::Rational;
use crate::polynomial::{ext_gcd_traced, gcd_traced, Polynomial};
use crate::trace::BitTrace;

/// Which computation of `M_f` to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// `[M_f] = P(C_f0)[g]`, evaluated by Horner on the coordinate vector.
    Companion,
    /// `M_f = (P g) mod f0`.
    Modular,
    /// Both routes, failing unless they agree exactly.
    Both,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Companion => "companion",
            Route::Modular => "modular",
            Route::Both => "both",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    /// Monic input (after normalization, if any).
    pub f: Polynomial,
    /// Set when the caller's polynomial was not monic and was divided by its leading coefficient.
    pub normalized: bool,
    /// `gcd(f, f')`.
    pub gcd_f_df: Polynomial,
    /// Square-free part `f / gcd(f, f')`.
    pub f0: Polynomial,
    /// `f' / gcd(f, f')`.
    pub p: Polynomial,
    /// Inverse of `f0'` modulo `f0`.
    pub g: Polynomial,
    /// Cofactor with `f0' g + f0 h = 1`.
    pub h: Polynomial,
    pub mf: Polynomial,
    pub route: Route,
}

impl MultiplicityReport {
    /// `deg f0`, the number of distinct roots.
    pub fn s(&self) -> usize {
        self.f0.degree().expect("f0 has positive degree")
    }

    /// `P(C_f0)`, whose columns are `[P], C[P], ..., C^(s-1)[P]`.
    pub fn product_matrix(&self) -> Result<RationalMatrix> {
        eval_at_companion(&self.p, &self.f0)
    }

    /// `M_f(C_f0)`.
    pub fn mf_matrix(&self) -> Result<RationalMatrix> {
        eval_at_companion(&self.mf, &self.f0)
    }
}

/// Exponents of the factorization shape, read from `char_poly(M_f(C_f0))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeForecast {
    pub m: usize,
    /// `k -> deg P_k`, only for `k` with `deg P_k > 0`.
    pub degrees: BTreeMap<usize, usize>,
}

pub(crate) fn require_monic(f: &Polynomial) -> Result<usize> {
    match f.degree() {
        None | Some(0) => Err(Error::ConstantPolynomial(f.to_string())),
        Some(_) if !f.is_monic() => Err(Error::NotMonic(f.to_string())),
        Some(n) => Ok(n),
    }
}

/// Monic version of `f` and whether it had to be rescaled.
pub fn normalize_input(f: &Polynomial) -> Result<(Polynomial, bool)> {
    match f.degree() {
        None | Some(0) => Err(Error::ConstantPolynomial(f.to_string())),
        Some(_) if f.is_monic() => Ok((f.clone(), false)),
        Some(_) => Ok((f.make_monic()?, true)),
    }
}

/// `f / gcd(f, f')` for monic `f` of positive degree.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    require_monic(f)?;
    let d = gcd_traced(f, &f.derivative(), &mut BitTrace::new())?;
    f.exact_div(&d)
}

/// `M_f` by both routes, checked against each other.
pub fn compute_mf(f: &Polynomial) -> Result<MultiplicityReport> {
    compute_mf_traced(f, Route::Both, &mut BitTrace::new())
}

pub fn compute_mf_with(f: &Polynomial, route: Route) -> Result<MultiplicityReport> {
    compute_mf_traced(f, route, &mut BitTrace::new())
}

pub fn compute_mf_traced(f: &Polynomial, route: Route, trace: &mut BitTrace) -> Result<MultiplicityReport> {
    let (f, normalized) = normalize_input(f)?;
    let df = f.derivative();
    let gcd_f_df = gcd_traced(&f, &df, trace)?;
    let f0 = f.exact_div(&gcd_f_df)?;
    let p = df.exact_div(&gcd_f_df)?;
    trace.observe(&f0);
    trace.observe(&p);

    let s = f0.degree().expect("f0 divides a nonconstant f");
    if p.degree() >= Some(s) {
        return Err(Error::Internal(format!(
            "f'/gcd(f, f') = {p} has degree >= deg f0 = {s}"
        )));
    }

    let bezout = ext_gcd_traced(&f0.derivative(), &f0, trace)?;
    if !bezout.gcd.is_one() {
        return Err(Error::Internal(format!(
            "square-free part {f0} shares factor {} with its derivative",
            bezout.gcd
        )));
    }
    let (g, h) = (bezout.u, bezout.v);

    let companion = || -> Result<Polynomial> {
        let coords = apply_to_vector(&p, &f0, &g.coords(s)?)?;
        Ok(Polynomial::from_coords(&coords))
    };
    let modular = || (&p * &g).rem(&f0);

    let mf = match route {
        Route::Companion => companion()?,
        Route::Modular => modular()?,
        Route::Both => {
            let (a, b) = (companion()?, modular()?);
            if a != b {
                return Err(Error::Internal(format!(
                    "companion route gave {a}, modular route gave {b}"
                )));
            }
            a
        }
    };
    trace.observe(&mf);

    Ok(MultiplicityReport {
        f,
        normalized,
        gcd_f_df,
        f0,
        p,
        g,
        h,
        mf,
        route,
    })
}

/// Forecast of `deg P_k` for every `k`, before any component is computed.
pub fn degree_forecast(f: &Polynomial) -> Result<DegreeForecast> {
    forecast_from_report(&compute_mf(f)?)
}

pub fn forecast_from_report(report: &MultiplicityReport) -> Result<DegreeForecast> {
    let n = report.f.degree().expect("report input is nonconstant");
    let mut rest = char_poly(&report.mf_matrix()?);
    let mut degrees = BTreeMap::new();
    for k in 1..=n {
        let root = Rational::from(k as i64);
        let linear = Polynomial::linear_factor(root.clone());
        let mut count = 0;
        while !rest.is_constant() && rest.eval(&root).is_zero() {
            rest = rest.exact_div(&linear)?;
            count += 1;
        }
        if count > 0 {
            degrees.insert(k, count);
        }
    }
    if !rest.is_one() {
        return Err(Error::ForecastInconsistency(format!(
            "characteristic polynomial has leftover factor {rest}"
        )));
    }
    let weighted: usize = degrees.iter().map(|(k, d)| k * d).sum();
    if weighted != n {
        return Err(Error::ForecastInconsistency(format!(
            "weighted degree {weighted} does not match deg f = {n}"
        )));
    }
    let m = *degrees.keys().next_back().expect("s >= 1");
    Ok(DegreeForecast { m, degrees })
}
