//! Properties of the size-5 arrangements and the scheduling rules: phases
//! abut, fill exactly ten values per block, and the feasibility table is
//! exactly the residue condition.

use proptest::prelude::*;
use sb_core::{pair_frequencies, GroupedPointSet, PointId};
use sb_interleave::{
    five_block_run, mu1_head, schedule_five, single_five, table2_run, FivePhase,
};

fn disjoint_five_blocks(count: usize) -> Vec<Vec<PointId>> {
    (0..count)
        .map(|i| (0..5).map(|j| PointId::new(5 * i + j, 0)).collect())
        .collect()
}

fn feasible(count: usize, mu: u64) -> bool {
    count == 0
        || matches!(
            (mu % 3, count % 3),
            (0, 0) | (0, 1) | (1, 0) | (1, 2) | (2, 0)
        )
}

proptest! {
    #[test]
    fn schedule_exists_exactly_when_the_residues_allow(count in 0usize..40, mu in 0u64..12) {
        let got = schedule_five(count, mu);
        prop_assert_eq!(got.is_ok(), feasible(count, mu), "count={} mu={}", count, mu);
    }

    #[test]
    fn phases_abut_and_consume_every_block(count in 0usize..40, mu in 0u64..12) {
        prop_assume!(feasible(count, mu));
        let phases = schedule_five(count, mu).unwrap();
        let mut s = mu;
        let mut blocks = 0;
        for ph in &phases {
            let base = match ph {
                FivePhase::Run { base }
                | FivePhase::Head { base }
                | FivePhase::Table2 { base }
                | FivePhase::Single { base } => *base,
            };
            prop_assert_eq!(base, s);
            s += ph.edges();
            blocks += ph.block_count();
        }
        prop_assert_eq!(blocks, count);
        prop_assert_eq!(s, mu + 10 * count as u64);
    }

    // realize a feasible schedule on disjoint blocks and check the union
    // covers exactly the interval, ten consecutive values per block
    #[test]
    fn realized_schedules_cover_the_interval(count in 1usize..8, mu in 0u64..9) {
        prop_assume!(feasible(count, mu));
        let blocks = disjoint_five_blocks(count);
        let grouping = GroupedPointSet::uniform(1, 5 * count);
        let mut union = sb_core::BlockMultiset::new();
        let mut i = 0;
        for ph in schedule_five(count, mu).unwrap() {
            let ms = match ph {
                FivePhase::Run { base } => five_block_run(
                    [blocks[i].as_slice(), blocks[i + 1].as_slice(), blocks[i + 2].as_slice()],
                    base,
                ).unwrap(),
                FivePhase::Head { base } => {
                    mu1_head([blocks[i].as_slice(), blocks[i + 1].as_slice()], base).unwrap()
                }
                FivePhase::Table2 { base } => table2_run(
                    [blocks[i].as_slice(), blocks[i + 1].as_slice(), blocks[i + 2].as_slice()],
                    base,
                ).unwrap(),
                FivePhase::Single { base } => single_five(&blocks[i], base).unwrap(),
            };
            i += ph.block_count();
            union.extend_from(&ms, 1);
        }
        let table = pair_frequencies(&union, &grouping).unwrap();
        // values on pairs inside the chosen blocks are mu..mu+10*count
        let mut inside: Vec<u64> = Vec::new();
        for b in &blocks {
            for x in 0..5 {
                for y in x + 1..5 {
                    inside.push(table.get(b[x], b[y]));
                }
            }
        }
        inside.sort_unstable();
        let expected: Vec<u64> = (mu..mu + 10 * count as u64).collect();
        prop_assert_eq!(inside, expected);
    }
}
