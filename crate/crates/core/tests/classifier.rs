mod common;

use common::{agrees_with_walk, hand_walk, l_with_twice_nu, q, regions, Outcome, Q};
use modp_reduction::classifier::{classify_full, select_case, ClassifierInput, ReductionResult};
use modp_reduction::exactnum::{HalfInt, QuadElt};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn hand_walk_golden_examples() {
    let w = hand_walk(7, 5, &Q::zero(), &Q::zero());
    assert_eq!((w.kind, w.i, w.outcome), ("interval", 2, Outcome::Irreducible { c: 10 }));
    let w = hand_walk(5, 4, &q(3, 2), &Q::zero());
    assert_eq!((w.kind, w.outcome), ("even_last_interval", Outcome::Irreducible { c: 7 }));
    let w = hand_walk(5, 4, &q(1, 2), &Q::zero());
    assert_eq!(w.outcome, Outcome::Split { lambda: 2, e1: 2, e2: 1 });
}

#[test]
fn classifier_golden_examples() {
    let run = |p, k, l: &str| classify_full(&ClassifierInput::new(p, k, QuadElt::parse(l, p).unwrap()).unwrap()).unwrap();
    assert_eq!(run(7, 5, "0").result, ReductionResult::Irreducible { c_raw: 10, c: 10 });
    assert_eq!(run(5, 4, "3/2").result, ReductionResult::Irreducible { c_raw: 7, c: 7 });
    match run(5, 4, "1/2").result {
        ReductionResult::ReducibleSplit { lambda, lambda_inv, e1, e2 } => {
            assert_eq!((lambda.c0.value, lambda.c1.value, lambda_inv.c0.value, e1, e2), (2, 0, 3, 2, 1));
        }
        other => panic!("unexpected {other}"),
    }
}

#[test]
fn partition_of_valuations() {
    for r in 1..=12i64 {
        let mut ts: Vec<Option<i64>> = (-2 * r - 4..=6).map(Some).collect();
        ts.push(None);
        for t in ts {
            let hits: Vec<_> = regions(r).into_iter().filter(|(_, _, f)| f(t)).collect();
            assert_eq!(hits.len(), 1, "r={r} 2nu={t:?}");
            let nu = t.map_or(HalfInt::Infinite, HalfInt::from_twice);
            let c = select_case(r as u64, nu);
            assert_eq!((c.kind.name(), c.i as i64), (hits[0].0, hits[0].1), "r={r} 2nu={t:?}");
        }
    }
}

#[test]
fn grid_against_hand_walk() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in [5u64, 7, 11, 13] {
        for k in 3..=p + 1 {
            let r = k as i64 - 2;
            let mut ts: Vec<Option<i64>> = (-2 * r - 2..=4).map(Some).collect();
            ts.push(None);
            for t in ts {
                for _ in 0..3 {
                    let (a, b) = l_with_twice_nu(p, k, t, &mut rng);
                    agrees_with_walk(p, k, &a, &b).unwrap();
                }
            }
        }
    }
}

#[test]
fn rejects_out_of_range() {
    let zero = |p| QuadElt::zero(p);
    assert!(ClassifierInput::new(3, 4, zero(3)).is_err());
    assert!(ClassifierInput::new(9, 4, zero(9)).is_err());
    assert!(ClassifierInput::new(7, 2, zero(7)).is_err());
    assert!(ClassifierInput::new(7, 9, zero(7)).is_err());
    assert!(ClassifierInput::new(7, 4, zero(5)).is_err());
}

fn det_exponent(r: &ReductionResult) -> u64 {
    match r {
        ReductionResult::Irreducible { c, .. } => *c,
        ReductionResult::ReducibleSplit { e1, e2, .. } => e1 + e2,
        ReductionResult::SelfDual { e, .. } => 2 * e,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_inputs_match_walk(pi in 0usize..4, kk in 0u64..20, t in -30i64..8, inf in 0u8..10, seed in any::<u64>()) {
        let p = [5u64, 7, 11, 13][pi];
        let k = 3 + kk % (p - 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = if inf == 0 { None } else { Some(t) };
        let (a, b) = l_with_twice_nu(p, k, t, &mut rng);
        prop_assert_eq!(agrees_with_walk(p, k, &a, &b), Ok(()));

        let c = classify_full(&ClassifierInput::new(p, k, QuadElt::new(p, a, b)).unwrap()).unwrap();
        // determinant ω^{k−1}
        prop_assert_eq!(det_exponent(&c.result) % (p - 1), (k - 1) % (p - 1));
        match &c.result {
            ReductionResult::Irreducible { c_raw, .. } => prop_assert!(c_raw % (p + 1) != 0),
            ReductionResult::ReducibleSplit { lambda, lambda_inv, .. } | ReductionResult::SelfDual { lambda, lambda_inv, .. } => {
                prop_assert!((*lambda * *lambda_inv).is_one());
            }
        }
    }
}
