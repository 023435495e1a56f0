//! Square-free factorization `f = P_1 P_2^2 ... P_m^m` by three methods:
//! gcds against the multiplicity polynomial, the `D_k = gcd(D_(k-1), D_(k-1)')`
//! chain, and Yun's algorithm.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::multiplicity::{compute_mf_traced, require_monic, Route};
use crate::number::Rational;
use crate::polynomial::{gcd_traced, poly_gcd, Polynomial};
use crate::trace::BitTrace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Companion,
    TobeyHorowitz,
    Yun,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Companion, Method::TobeyHorowitz, Method::Yun];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Companion => "companion",
            Method::TobeyHorowitz => "tobey",
            Method::Yun => "yun",
        }
    }

    pub fn factor(self, f: &Polynomial) -> Result<SquareFreeFactorization> {
        self.factor_traced(f, &mut BitTrace::new())
    }

    pub fn factor_traced(self, f: &Polynomial, trace: &mut BitTrace) -> Result<SquareFreeFactorization> {
        match self {
            Method::Companion => factor_companion_traced(f, trace),
            Method::TobeyHorowitz => factor_tobey_horowitz_traced(f, trace),
            Method::Yun => factor_yun_traced(f, trace),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Nonconstant components `(k, P_k)` in increasing `k`. Absent `k` means `P_k = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreeFactorization {
    components: Vec<(usize, Polynomial)>,
}

impl SquareFreeFactorization {
    /// Sorts by `k` and drops constant components. Repeated `k` are kept as given,
    /// so a malformed list still reaches [`verify_factorization`] intact.
    pub fn new(mut components: Vec<(usize, Polynomial)>) -> Self {
        components.retain(|(_, p)| !p.is_constant());
        components.sort_by_key(|(k, _)| *k);
        SquareFreeFactorization { components }
    }

    pub fn components(&self) -> &[(usize, Polynomial)] {
        &self.components
    }

    /// Largest `k` with a nonconstant `P_k`; 0 for an empty list.
    pub fn m(&self) -> usize {
        self.components.last().map_or(0, |(k, _)| *k)
    }

    pub fn get(&self, k: usize) -> Option<&Polynomial> {
        self.components.iter().find(|(j, _)| *j == k).map(|(_, p)| p)
    }

    /// `k -> deg P_k`.
    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        self.components
            .iter()
            .map(|(k, p)| (*k, p.degree_or_zero()))
            .collect()
    }

    pub fn weighted_degree(&self) -> usize {
        self.components.iter().map(|(k, p)| k * p.degree_or_zero()).sum()
    }

    /// `prod P_k^k`.
    pub fn expand(&self) -> Polynomial {
        self.components
            .iter()
            .fold(Polynomial::one(), |acc, (k, p)| &acc * &p.pow(*k as u32))
    }
}

impl fmt::Display for SquareFreeFactorization {
    /// `(P_1) * (P_2)^2 * ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("1");
        }
        for (i, (k, p)) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "({p})")?;
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

pub fn factor_companion(f: &Polynomial) -> Result<SquareFreeFactorization> {
    factor_companion_traced(f, &mut BitTrace::new())
}

/// `P_k = gcd(M_f - k, f0)` for `k = 1, 2, ...` until `sum_i i deg P_i = deg f`.
pub fn factor_companion_traced(f: &Polynomial, trace: &mut BitTrace) -> Result<SquareFreeFactorization> {
    let n = require_monic(f)?;
    let report = compute_mf_traced(f, Route::Companion, trace)?;
    let mut components = Vec::new();
    let mut weighted = 0;
    for k in 1..=n {
        let shifted = &report.mf - &Polynomial::constant(Rational::from(k as i64));
        let pk = gcd_traced(&shifted, &report.f0, trace)?;
        if let Some(d) = pk.degree().filter(|&d| d > 0) {
            weighted += k * d;
            components.push((k, pk));
        }
        if weighted >= n {
            break;
        }
    }
    if weighted != n {
        return Err(Error::Internal(format!(
            "companion method reached weighted degree {weighted}, expected {n}"
        )));
    }
    Ok(SquareFreeFactorization::new(components))
}

pub fn factor_tobey_horowitz(f: &Polynomial) -> Result<SquareFreeFactorization> {
    factor_tobey_horowitz_traced(f, &mut BitTrace::new())
}

/// `D_0 = f`, `D_(k+1) = gcd(D_k, D_k')` until `D_m = 1`, then
/// `P_k = (D_(k-1) / D_k) / (D_k / D_(k+1))`.
pub fn factor_tobey_horowitz_traced(f: &Polynomial, trace: &mut BitTrace) -> Result<SquareFreeFactorization> {
    require_monic(f)?;
    let mut chain = vec![f.clone()];
    while let Some(last) = chain.last().filter(|d| !d.is_one()) {
        let next = gcd_traced(last, &last.derivative(), trace)?;
        chain.push(next);
    }
    // E_k = D_(k-1) / D_k = P_k P_(k+1) ... P_m, with E_(m+1) = 1.
    let mut tails = chain
        .windows(2)
        .map(|w| w[0].exact_div(&w[1]))
        .collect::<Result<Vec<_>>>()?;
    tails.push(Polynomial::one());
    let components = tails
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let pk = w[0].exact_div(&w[1])?;
            trace.observe(&pk);
            Ok((i + 1, pk))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SquareFreeFactorization::new(components))
}

pub fn factor_yun(f: &Polynomial) -> Result<SquareFreeFactorization> {
    factor_yun_traced(f, &mut BitTrace::new())
}

pub fn factor_yun_traced(f: &Polynomial, trace: &mut BitTrace) -> Result<SquareFreeFactorization> {
    require_monic(f)?;
    let df = f.derivative();
    let a0 = gcd_traced(f, &df, trace)?;
    let mut b = f.exact_div(&a0)?;
    let mut c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut components = Vec::new();
    let mut k = 1;
    while !b.is_one() {
        let a = gcd_traced(&b, &d, trace)?;
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        trace.observe(&d);
        components.push((k, a));
        k += 1;
    }
    Ok(SquareFreeFactorization::new(components))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Checks every structural property of `sf` against `f`. Never fails; problems are report entries.
pub fn verify_factorization(f: &Polynomial, sf: &SquareFreeFactorization) -> VerificationReport {
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| checks.push(Check { name, passed, detail });
    let comps = sf.components();

    let expanded = sf.expand();
    push(
        "reassembly",
        expanded == *f,
        format!("product of P_k^k is {expanded}"),
    );

    let bad: Vec<usize> = comps
        .iter()
        .filter(|(_, p)| !p.is_monic())
        .map(|(k, _)| *k)
        .collect();
    push(
        "monic",
        bad.is_empty(),
        format!("non-monic components at k = {bad:?}"),
    );

    let bad: Vec<usize> = comps
        .iter()
        .filter(|(_, p)| !poly_gcd(p, &p.derivative()).is_ok_and(|g| g.is_one()))
        .map(|(k, _)| *k)
        .collect();
    push(
        "square-free",
        bad.is_empty(),
        format!("components with repeated factors at k = {bad:?}"),
    );

    let mut bad = Vec::new();
    for (i, (ki, pi)) in comps.iter().enumerate() {
        for (kj, pj) in &comps[i + 1..] {
            if !poly_gcd(pi, pj).is_ok_and(|g| g.is_one()) {
                bad.push((*ki, *kj));
            }
        }
    }
    push(
        "pairwise-coprime",
        bad.is_empty(),
        format!("non-coprime pairs {bad:?}"),
    );

    let distinct = comps.windows(2).all(|w| w[0].0 < w[1].0) && comps.iter().all(|(k, _)| *k >= 1);
    push(
        "distinct-k",
        distinct,
        "each k >= 1 appears at most once".to_string(),
    );

    let n = f.degree_or_zero();
    let weighted = sf.weighted_degree();
    push(
        "weighted-degree",
        weighted == n,
        format!("sum k deg P_k = {weighted}, deg f = {n}"),
    );

    VerificationReport { checks }
}
