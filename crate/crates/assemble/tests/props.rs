//! Property tests over the assembly layer: interval starts track lifting,
//! inflation preserves the GDD property, and construction is a pure
//! function of its parameters.

use proptest::prelude::*;
use sb_assemble::construct;
use sb_core::{pair_frequencies, verify};
use sb_ingredients::{lambda_gdd3, small_gdd, weight_inflate};
use sb_interleave::lift;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // lifting an interval design by k copies of an index-lambda GDD shifts
    // the interval start by exactly k * lambda and nothing else
    #[test]
    fn lift_shifts_interval_start(k in 0u64..5, u in prop::sample::select(vec![4usize, 6])) {
        let base = construct(2, u, 0).unwrap();
        let lifter = lambda_gdd3(2, u, 1).unwrap();
        let lifted = lift(&base, &lifter, k).unwrap();
        prop_assert!(verify(&lifted).pass);
        let f = pair_frequencies(&lifted.blocks, &lifted.grouping).unwrap();
        let base_f = pair_frequencies(&base.blocks, &base.grouping).unwrap();
        for (&(a, b), &v) in base_f.iter() {
            prop_assert_eq!(f.get(a, b), v + k);
        }
    }

    // inflating a constant-index GDD by weight w stays a GDD as long as the
    // blown-up groups stay within reach (m * w <= 12)
    #[test]
    fn inflation_preserves_gdd(tag in prop::sample::select(vec!['a', 'e']), w in 1usize..4) {
        let base = small_gdd(tag).unwrap();
        let m = base.grouping.group_sizes()[0];
        prop_assume!(m * w <= 12);
        let big = weight_inflate(&base, w);
        prop_assert!(verify(&big).pass);
    }

    // the constructor is deterministic: the same parameters always yield
    // the same block multiset
    #[test]
    fn construction_is_deterministic(g in 2usize..5, u in 3usize..8, mu in 0u64..4) {
        prop_assume!(sb_core::admissible(g as u64, u as u64, mu).is_admissible());
        let a = construct(g, u, mu).unwrap();
        let b = construct(g, u, mu).unwrap();
        prop_assert_eq!(sb_core::format::to_text(&a), sb_core::format::to_text(&b));
    }

    // observed frequencies of any constructed design are the consecutive
    // integers from mu, each exactly once
    #[test]
    fn interval_is_exact(g in 1usize..5, u in 3usize..8, mu in 0u64..4) {
        prop_assume!(sb_core::admissible(g as u64, u as u64, mu).is_admissible());
        let d = construct(g, u, mu).unwrap();
        let f = pair_frequencies(&d.blocks, &d.grouping).unwrap();
        let values = f.value_multiset();
        let expected: Vec<u64> = (mu..mu + values.len() as u64).collect();
        prop_assert_eq!(values, expected);
    }
}
