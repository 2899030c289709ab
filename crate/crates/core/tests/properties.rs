use injection_scheme::bounds::{allowed_classes, lp_optimum, solve_lp, DistanceSet};
use injection_scheme::partition::factorial;
use injection_scheme::scheme::{combinatorial_table, dual_table, DEFAULT_BUDGET};
use injection_scheme::{
    classify_pair, enumerate_partitions, enumerate_syt, hamming_distance, rsk, rsk_inverse, syt_count, CharacterTable,
    Injection, Partition,
};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_injection(rng: &mut impl Rng, k: usize, n: usize) -> Injection {
    let mut values: Vec<usize> = (1..=n).collect();
    values.shuffle(rng);
    values.truncate(k);
    Injection::new(values, n).unwrap()
}

fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    p.shuffle(rng);
    p
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..9, 0..8).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

fn injection_strategy() -> impl Strategy<Value = Injection> {
    (1usize..=12)
        .prop_flat_map(|n| (1usize..=n, Just(n)))
        .prop_flat_map(|(k, n)| (Just(n), Just(k), Just((1..=n).collect::<Vec<_>>()).prop_shuffle()))
        .prop_map(|(n, k, mut v)| {
            v.truncate(k);
            Injection::new(v, n).unwrap()
        })
}

proptest! {
    #[test]
    fn transpose_is_an_involution(p in partition_strategy()) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().weight(), p.weight());
    }

    #[test]
    fn rsk_round_trips(sigma in injection_strategy()) {
        let pair = rsk(&sigma);
        prop_assert_eq!(pair.p.size(), sigma.n());
        prop_assert_eq!(pair.q.size(), sigma.k());
        prop_assert_eq!(rsk_inverse(&pair.p, &pair.q).unwrap(), sigma);
    }

    #[test]
    fn distance_is_constant_on_classes(a in injection_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_injection(&mut rng, a.k(), a.n());
        let class = classify_pair(&a, &b).unwrap();
        prop_assert_eq!(class.distance(), hamming_distance(&a, &b).unwrap());
        prop_assert_eq!(classify_pair(&b, &a).unwrap().distance(), class.distance());
    }
}

#[test]
fn hook_length_counts_match_enumeration() {
    for n in 0..=8 {
        let mut total = BigUint::from(0u32);
        for shape in enumerate_partitions(n, None) {
            let f = syt_count(&shape);
            assert_eq!(f, BigUint::from(enumerate_syt(&shape).len()), "{shape}");
            total += &f * &f;
        }
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn classification_is_group_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=7 {
        for k in 1..=n.min(5) {
            for _ in 0..500 {
                let a = random_injection(&mut rng, k, n);
                let b = random_injection(&mut rng, k, n);
                let tau = random_perm(&mut rng, k);
                let pi = random_perm(&mut rng, n);
                let before = classify_pair(&a, &b).unwrap();
                let after = classify_pair(&a.act(&tau, &pi), &b.act(&tau, &pi)).unwrap();
                assert_eq!(before, after, "({k}, {n}) {a} {b}");
            }
        }
    }
}

fn subsets(k: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << k)).map(|mask| (1..=k).filter(|d| mask & (1 << (d - 1)) != 0).collect()).collect()
}

fn table(k: usize, n: usize) -> CharacterTable {
    combinatorial_table(k, n, DEFAULT_BUDGET).unwrap()
}

#[test]
fn lp_is_monotone_in_the_distance_set() {
    for (k, n) in [(3, 5), (4, 5), (3, 6)] {
        let t = table(k, n);
        let all = subsets(k);
        let optima: Vec<BigRational> =
            all.iter().map(|s| lp_optimum(&t, &DistanceSet::explicit(k, s).unwrap()).unwrap().optimum).collect();
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                if a.iter().all(|d| b.contains(d)) {
                    assert!(optima[i] <= optima[j], "({k}, {n}) {a:?} ⊆ {b:?}");
                }
            }
        }
        assert_eq!(optima.last().unwrap(), &BigRational::from_integer(BigInt::from(t.order())));
    }
}

#[test]
fn exact_clique_coclique_product() {
    for (k, n) in [(3, 5), (4, 5), (4, 6), (5, 6)] {
        let t = table(k, n);
        let order = BigRational::from_integer(BigInt::from(t.order()));
        for s in subsets(k) {
            let set = DistanceSet::explicit(k, &s).unwrap();
            let Some(rest) = set.complement() else { continue };
            let product = lp_optimum(&t, &set).unwrap().optimum * lp_optimum(&t, &rest).unwrap().optimum;
            assert!(product <= order, "({k}, {n}) {s:?}: {product}");
        }
    }
}

#[test]
fn lp_ignores_constraint_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (k, n) in [(3, 5), (4, 6)] {
        let t = table(k, n);
        let q = dual_table(&t).unwrap();
        for s in subsets(k) {
            let mut allowed = allowed_classes(&t, &DistanceSet::explicit(k, &s).unwrap());
            let reference = solve_lp(&q, &allowed).unwrap().optimum;
            for _ in 0..3 {
                allowed.shuffle(&mut rng);
                assert_eq!(solve_lp(&q, &allowed).unwrap().optimum, reference, "({k}, {n}) {s:?}");
            }
        }
    }
}
