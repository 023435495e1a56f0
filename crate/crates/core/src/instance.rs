//! Seeded random instances with a known square-free factorization.
//!
//! `f` is assembled from its answer: pairwise-coprime monic square-free
//! factors `q_i` with multiplicities `k_i`, so `P_k` is the product of the
//! `q_i` with `k_i = k`. Coprimality and square-freeness are enforced by
//! rejection sampling.

use rand::Rng;

use crate::error::{Error, Result};
use crate::number::Rational;
use crate::polynomial::{poly_gcd, Polynomial};
use crate::squarefree::SquareFreeFactorization;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    /// Integers in `[-9, 9]`.
    Integer,
    /// `p / q` with `p` in `[-9, 9]`, `q` in `[1, 4]`.
    Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub min_degree: usize,
    pub max_degree: usize,
    pub max_mult: usize,
    /// Upper bound on the degree of each square-free building block.
    pub max_factor_degree: usize,
    pub coeffs: CoeffKind,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            min_degree: 1,
            max_degree: 20,
            max_mult: 5,
            max_factor_degree: 4,
            coeffs: CoeffKind::Integer,
        }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.min_degree == 0 {
            return Err(Error::InvalidBounds("minimum degree must be at least 1".into()));
        }
        if self.max_degree < self.min_degree {
            return Err(Error::InvalidBounds(format!(
                "maximum degree {} is below minimum degree {}",
                self.max_degree, self.min_degree
            )));
        }
        if self.max_mult == 0 {
            return Err(Error::InvalidBounds(
                "maximum multiplicity must be at least 1".into(),
            ));
        }
        if self.max_factor_degree == 0 {
            return Err(Error::InvalidBounds(
                "factor degree bound must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub f: Polynomial,
    /// The building blocks `(q_i, k_i)`.
    pub factors: Vec<(Polynomial, usize)>,
    pub expected: SquareFreeFactorization,
}

impl Instance {
    pub fn from_factors(factors: Vec<(Polynomial, usize)>) -> Self {
        let f = factors
            .iter()
            .fold(Polynomial::one(), |acc, (q, k)| &acc * &q.pow(*k as u32));
        let mut by_k: Vec<(usize, Polynomial)> = Vec::new();
        for (q, k) in &factors {
            match by_k.iter_mut().find(|(j, _)| j == k) {
                Some((_, p)) => *p = &*p * q,
                None => by_k.push((*k, q.clone())),
            }
        }
        Instance {
            f,
            factors,
            expected: SquareFreeFactorization::new(by_k),
        }
    }
}

fn random_coeff<R: Rng + ?Sized>(rng: &mut R, kind: CoeffKind, spread: i64) -> Rational {
    let numer = rng.gen_range(-spread..=spread);
    match kind {
        CoeffKind::Integer => Rational::from(numer),
        CoeffKind::Rational => Rational::frac(numer, rng.gen_range(1..=4)),
    }
}

fn random_monic<R: Rng + ?Sized>(rng: &mut R, degree: usize, kind: CoeffKind, spread: i64) -> Polynomial {
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| random_coeff(rng, kind, spread)).collect();
    coeffs.push(Rational::one());
    Polynomial::from_coeffs(coeffs)
}

fn is_coprime(a: &Polynomial, b: &Polynomial) -> bool {
    poly_gcd(a, b).is_ok_and(|g| g.is_one())
}

/// A monic square-free polynomial of the given degree, coprime to `avoid`.
/// The coefficient spread widens after repeated rejections.
pub fn random_squarefree_coprime<R: Rng + ?Sized>(
    rng: &mut R,
    degree: usize,
    kind: CoeffKind,
    avoid: &Polynomial,
) -> Polynomial {
    let mut spread = 9;
    loop {
        for _ in 0..64 {
            let q = random_monic(rng, degree, kind, spread);
            if is_coprime(&q, &q.derivative()) && is_coprime(&q, avoid) {
                return q;
            }
        }
        spread *= 2;
    }
}

/// A random instance whose degree lies in `[min_degree, max_degree]`.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, config: &GeneratorConfig) -> Result<Instance> {
    config.validate()?;
    let n = rng.gen_range(config.min_degree..=config.max_degree);
    let mut remaining = n;
    let mut used = Polynomial::one();
    let mut factors = Vec::new();
    while remaining > 0 {
        let k = rng.gen_range(1..=config.max_mult.min(remaining));
        let d = rng.gen_range(1..=config.max_factor_degree.min(remaining / k));
        let q = random_squarefree_coprime(rng, d, config.coeffs, &used);
        used = &used * &q;
        remaining -= k * d;
        factors.push((q, k));
    }
    Ok(Instance::from_factors(factors))
}

/// `prod (X - a_i)^(k_i)` with `count` distinct rational roots `a_i`.
/// Returns the instance together with the `(a_i, k_i)` pairs.
pub fn random_rational_roots<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    max_mult: usize,
) -> (Instance, Vec<(Rational, usize)>) {
    let mut roots: Vec<(Rational, usize)> = Vec::with_capacity(count);
    while roots.len() < count {
        let a = Rational::frac(rng.gen_range(-30..=30), rng.gen_range(1..=7));
        if roots.iter().all(|(b, _)| *b != a) {
            roots.push((a, rng.gen_range(1..=max_mult.max(1))));
        }
    }
    let factors = roots
        .iter()
        .map(|(a, k)| (Polynomial::linear_factor(a.clone()), *k))
        .collect();
    (Instance::from_factors(factors), roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::squarefree::verify_factorization;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn instances_are_well_formed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for coeffs in [CoeffKind::Integer, CoeffKind::Rational] {
            let config = GeneratorConfig {
                min_degree: 5,
                max_degree: 15,
                coeffs,
                ..GeneratorConfig::default()
            };
            for _ in 0..30 {
                let inst = random_instance(&mut rng, &config).unwrap();
                let n = inst.f.degree().unwrap();
                assert!((5..=15).contains(&n));
                assert!(inst.f.is_monic());
                assert!(verify_factorization(&inst.f, &inst.expected).all_passed());
            }
        }
    }

    #[test]
    fn same_seed_same_instances() {
        let config = GeneratorConfig::default();
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..5)
                .map(|_| random_instance(&mut rng, &config).unwrap().f)
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(42), draw(42));
        assert_ne!(draw(42), draw(43));
    }

    #[test]
    fn invalid_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for config in [
            GeneratorConfig {
                min_degree: 0,
                max_degree: 0,
                ..GeneratorConfig::default()
            },
            GeneratorConfig {
                min_degree: 5,
                max_degree: 3,
                ..GeneratorConfig::default()
            },
            GeneratorConfig {
                max_mult: 0,
                ..GeneratorConfig::default()
            },
        ] {
            assert!(matches!(
                random_instance(&mut rng, &config),
                Err(Error::InvalidBounds(_))
            ));
        }
    }

    #[test]
    fn rational_roots_are_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (inst, roots) = random_rational_roots(&mut rng, 6, 4);
        let n: usize = roots.iter().map(|(_, k)| k).sum();
        assert_eq!(inst.f.degree(), Some(n));
        for (a, _) in &roots {
            assert!(inst.f.eval(a).is_zero());
        }
    }
}
