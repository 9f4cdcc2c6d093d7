mod common;

use num_bigint::BigUint;
use pogp::oracle::{self, Budget};
use pogp::{avoids, mnd, occurrences, quasi_avoids};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bijections_preserve_avoidance(seed in any::<u64>(), k in 1u32..=4, n in 0usize..=8) {
        let mut r = rng(seed);
        let (p, _) = common::random_pattern(&mut r, 4);
        let w = common::random_word(&mut r, k, n);
        let base = avoids(&w, &p);
        prop_assert_eq!(base, avoids(&w.reversed(), &p.reversed()));
        prop_assert_eq!(base, avoids(&w.complemented(), &p.complemented()));
    }

    #[test]
    fn bijections_are_involutions(seed in any::<u64>(), k in 1u32..=4, n in 0usize..=8) {
        let mut r = rng(seed);
        let (p, _) = common::random_pattern(&mut r, 5);
        let w = common::random_word(&mut r, k, n);
        prop_assert_eq!(&w.reversed().reversed(), &w);
        prop_assert_eq!(&w.complemented().complemented(), &w);
        prop_assert_eq!(&p.reversed().reversed(), &p);
        prop_assert_eq!(&p.complemented().complemented(), &p);
    }

    #[test]
    fn expansion_is_sound(seed in any::<u64>(), k in 1u32..=3, n in 0usize..=7) {
        let mut r = rng(seed);
        let (p, _) = common::random_pattern(&mut r, 4);
        let w = common::random_word(&mut r, k, n);
        let expanded = p.expand();
        prop_assert!(!expanded.is_empty());
        prop_assert_eq!(avoids(&w, &p), expanded.iter().all(|q| avoids(&w, q)));
    }

    #[test]
    fn greedy_mnd_is_optimal(seed in any::<u64>(), k in 1u32..=3, n in 0usize..=10) {
        let mut r = rng(seed);
        let p = common::random_block(&mut r, 3);
        let w = common::random_word(&mut r, k, n);
        prop_assert_eq!(mnd(&w, &p).unwrap(), common::exhaustive_mnd(&occurrences(&w, &p)));
    }

    #[test]
    fn quasi_avoidance_means_last_letter_completes(seed in any::<u64>(), k in 1u32..=3, n in 0usize..=8) {
        let mut r = rng(seed);
        let p = common::random_block(&mut r, 3);
        let w = common::random_word(&mut r, k, n);
        if quasi_avoids(&w, &p).unwrap() {
            prop_assert!(!avoids(&w, &p));
            prop_assert!(avoids(&w.prefix(n - p.len()), &p));
            prop_assert!(avoids(&w.prefix(n - 1), &p));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn avoider_counts_grow_with_alphabet(seed in any::<u64>(), k in 1u32..=3, n in 0usize..=6) {
        let (p, _) = common::random_pattern(&mut rng(seed), 4);
        let small = oracle::count_avoiders(&p, k, n, Budget::default()).unwrap();
        let large = oracle::count_avoiders(&p, k + 1, n, Budget::default()).unwrap();
        prop_assert!(small <= large);
        prop_assert!(small <= BigUint::from(k).pow(n as u32));
    }

    #[test]
    fn short_alphabets_cannot_host_tall_chains(seed in any::<u64>(), n in 0usize..=6) {
        let (p, _) = common::random_pattern(&mut rng(seed), 5);
        let h = p.chain_height() as u32;
        for k in 1..h.min(4) {
            let count = oracle::count_avoiders(&p, k, n, Budget::default()).unwrap();
            prop_assert_eq!(count, BigUint::from(k).pow(n as u32));
        }
    }

    #[test]
    fn avoiders_extend_avoiders(seed in any::<u64>(), k in 1u32..=4) {
        let (p, _) = common::random_pattern(&mut rng(seed), 4);
        let t = oracle::avoider_series(&p, k, 6, Budget::default()).unwrap();
        for n in 1..t.counts.len() {
            prop_assert!(t.counts[n] <= &t.counts[n - 1] * k);
        }
    }

    #[test]
    fn quasi_count_identity(seed in any::<u64>(), k in 1u32..=3) {
        let p = common::random_block(&mut rng(seed), 3);
        let t = oracle::avoider_series(&p, k, 6, Budget::default()).unwrap();
        for n in 1..=6 {
            let quasi = oracle::count_quasi_avoiders(&p, k, n, Budget::default()).unwrap();
            prop_assert_eq!(&quasi + &t.counts[n], &t.counts[n - 1] * k);
        }
    }

    #[test]
    fn mnd_histogram_partitions_words(seed in any::<u64>(), k in 1u32..=3, n in 0usize..=6) {
        let p = common::random_block(&mut rng(seed), 3);
        let h = oracle::mnd_distribution(&p, k, n, Budget::default()).unwrap();
        prop_assert_eq!(h.total(), BigUint::from(k).pow(n as u32));
        prop_assert!(h.histogram.keys().all(|&s| s <= n / p.len()));
        let avoiders = oracle::count_avoiders(&p, k, n, Budget::default()).unwrap();
        prop_assert_eq!(h.get(0), avoiders);
    }
}

#[test]
fn generator_covers_every_shape() {
    use pogp::PatternKind;
    let mut r = rng(7);
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..2000 {
        let (p, _) = common::random_pattern(&mut r, 5);
        seen.insert(format!("{:?}", p.classify().kind));
    }
    for kind in [PatternKind::Plain, PatternKind::Multi, PatternKind::Shuffle, PatternKind::Other] {
        assert!(seen.contains(&format!("{kind:?}")), "{kind:?} never generated");
    }
}
