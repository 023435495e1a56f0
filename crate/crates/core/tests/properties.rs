use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sqfree_core::instance::{random_instance, random_rational_roots, CoeffKind, GeneratorConfig, Instance};
use sqfree_core::{
    compute_mf, degree_forecast, factor_companion, verify_factorization, Method, Polynomial, Rational,
};

fn instance(seed: u64, max_degree: usize, rational: bool) -> Instance {
    let config = GeneratorConfig {
        min_degree: 1,
        max_degree,
        max_mult: 5,
        coeffs: if rational {
            CoeffKind::Rational
        } else {
            CoeffKind::Integer
        },
        ..GeneratorConfig::default()
    };
    random_instance(&mut ChaCha8Rng::seed_from_u64(seed), &config).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn methods_recover_the_construction(seed: u64, rational: bool) {
        let inst = instance(seed, 24, rational);
        for m in Method::ALL {
            let sf = m.factor(&inst.f).unwrap();
            prop_assert_eq!(&sf, &inst.expected, "{} on {}", m, inst.f);
            prop_assert!(verify_factorization(&inst.f, &sf).all_passed());
        }
    }

    #[test]
    fn forecast_matches_factor_degrees(seed: u64, rational: bool) {
        let inst = instance(seed, 20, rational);
        let fc = degree_forecast(&inst.f).unwrap();
        prop_assert_eq!(fc.degrees, inst.expected.degree_profile());
        prop_assert_eq!(fc.m, inst.expected.m());
    }

    #[test]
    fn mf_minus_k_vanishes_on_each_block(seed: u64, rational: bool) {
        let inst = instance(seed, 20, rational);
        let mf = compute_mf(&inst.f).unwrap().mf;
        for (q, k) in &inst.factors {
            let shifted = &mf - &Polynomial::constant(Rational::from(*k as i64));
            prop_assert!(q.divides(&shifted).unwrap(), "q = {}, k = {}", q, k);
        }
    }

    #[test]
    fn components_are_fixed_points(seed: u64) {
        let inst = instance(seed, 16, true);
        for (_, pk) in inst.expected.components() {
            let again = factor_companion(pk).unwrap();
            prop_assert_eq!(again.components(), &[(1, pk.clone())][..]);
        }
    }

    #[test]
    fn mf_is_scale_invariant(seed: u64, c in (1i64..50, 1i64..50)) {
        let inst = instance(seed, 16, false);
        let scaled = inst.f.scale(&Rational::frac(-c.0, c.1));
        prop_assert_eq!(compute_mf(&scaled).unwrap().mf, compute_mf(&inst.f).unwrap().mf);
    }

    #[test]
    fn mf_reads_off_rational_root_multiplicities(seed: u64, count in 1usize..7) {
        let (inst, roots) = random_rational_roots(&mut ChaCha8Rng::seed_from_u64(seed), count, 5);
        let mf = compute_mf(&inst.f).unwrap().mf;
        for (a, k) in roots {
            prop_assert_eq!(mf.eval(&a), Rational::from(k as i64));
        }
    }

    #[test]
    fn integer_inputs_give_integer_components(seed: u64) {
        let inst = instance(seed, 24, false);
        for m in Method::ALL {
            let sf = m.factor(&inst.f).unwrap();
            prop_assert!(sf.components().iter().all(|(_, pk)| pk.has_integer_coeffs()));
        }
    }
}
