mod common;

use common::*;
use hermsig::oracle::{run_suite, SuiteKind};
use hermsig::realform::gl_split_to_fundamental;
use hermsig::signature::gl_closed_form;
use hermsig::{builtin_group, Exec, GroupLabel, RootDatum, SignatureEngine};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_type() -> impl Strategy<Value = (char, usize)> {
    proptest::sample::select(small_types())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl_dimension_is_sum_of_multiplicities((f, r) in small_type(), seed in 0u64..1000) {
        let d = RootDatum::from_type(f, r).unwrap();
        let ws = weights_up_to(&d, 400);
        let lam = &ws[seed as usize % ws.len()];
        prop_assert_eq!(weyl_matches_freudenthal(&d, lam), Ok(1));
    }

    #[test]
    fn homogeneous_in_shifted_weight((f, r) in small_type(), psi in proptest::collection::vec(0i64..5, 4), k in 1i64..=4) {
        let d = RootDatum::from_type(f, r).unwrap();
        prop_assert_eq!(homogeneity(&d, &psi[..r], k), Ok(1));
    }

    #[test]
    fn dominant_representative_is_orbit_invariant(
        (f, r) in proptest::sample::select(vec![('A', 2), ('B', 2), ('C', 3), ('G', 2)]),
        phi in proptest::collection::vec(-4i64..=4, 3),
    ) {
        let d = RootDatum::from_type(f, r).unwrap();
        prop_assert!(dominant_rep_invariant(&d, &phi[..r]).is_ok());
    }

    #[test]
    fn kernel_signature_on_conjugated_blocks(seed in any::<u64>(), zeros in 0usize..5, pairs in 0usize..4) {
        prop_assume!(zeros + pairs > 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(kernel_case(&mut rng, zeros, pairs), Ok(1));
    }

    #[test]
    fn gl_formula_matches_closed_form(n in 2usize..=5, mu in proptest::collection::vec(0i64..=4, 2)) {
        let m = n / 2;
        let mut h: Vec<i64> = mu[..m].to_vec();
        h.sort_unstable_by(|a, b| b.cmp(a));
        let mut lam = h.clone();
        if n % 2 == 1 {
            lam.push(0);
        }
        lam.extend(h.iter().rev().map(|x| -x));
        let rf = builtin_group(&GroupLabel::GL(n)).unwrap();
        let r = SignatureEngine::new(&rf).unwrap().compute(&gl_split_to_fundamental(n, &lam).unwrap()).unwrap();
        prop_assert_eq!(r.sig, gl_closed_form(n, &lam).unwrap());
        prop_assert_eq!(r.p + r.q, r.dim);
        prop_assert!(r.sig * r.sig <= r.dim);
    }
}

#[test]
fn root_datum_axioms_on_builtins() {
    for l in small_builtins() {
        let rf = builtin_group(&l).unwrap();
        datum_axioms(rf.datum()).unwrap();
    }
    for (f, r) in small_types() {
        datum_axioms(&RootDatum::from_type(f, r).unwrap()).unwrap();
    }
}

#[test]
fn cosets_partition_and_epsilon_is_normalized() {
    for l in small_builtins() {
        coset_partition(&l).unwrap();
    }
    for l in [GroupLabel::SL(3), GroupLabel::GL(4), GroupLabel::Sp(2), GroupLabel::SO(3, 3)] {
        assert!(epsilon_normalized(&l, 3).unwrap() > 0);
    }
    epsilon_parity().unwrap();
}

#[test]
fn trivial_representation_has_signature_one() {
    for l in small_builtins() {
        let rf = builtin_group(&l).unwrap();
        let r = SignatureEngine::new(&rf).unwrap().compute(&rf.spec_from_character(&vec![0; rf.datum().rank()])).unwrap();
        assert_eq!((r.dim, r.sig), (1, 1), "{l}");
    }
}

#[test]
fn injected_fault_is_detected() {
    let clean = run_suite(SuiteKind::SplitC2, 100, Exec::Sequential, None).unwrap();
    assert!(clean.passed());
    let faulty = run_suite(SuiteKind::SplitC2, 100, Exec::Sequential, Some(1)).unwrap();
    assert!(!faulty.passed());
}

#[test]
fn sequential_and_parallel_agree() {
    let a = run_suite(SuiteKind::SplitC2, 100, Exec::Sequential, None).unwrap();
    let b = run_suite(SuiteKind::SplitC2, 100, Exec::Parallel, None).unwrap();
    assert_eq!(a.cases, b.cases);
}
