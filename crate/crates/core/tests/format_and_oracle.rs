//! Round-trip properties of the text and JSON formats, and an independent
//! frequency oracle checked against `pair_frequencies`.

use proptest::prelude::*;
use sb_core::{
    format, pair_frequencies, Block, BlockMultiset, Design, DesignKind, GroupedPointSet,
    PointId,
};
use std::collections::BTreeMap;

fn arb_design() -> impl Strategy<Value = Design> {
    (2usize..5, 1usize..4)
        .prop_flat_map(|(u, g)| {
            let grouping = GroupedPointSet::new(vec![g; u + 1]);
            let pts: Vec<PointId> = grouping.points().collect();
            let n = pts.len();
            let triple = (0..n, 0..n, 0..n, 1u64..4).prop_filter_map(
                "distinct groups",
                move |(i, j, k, m)| {
                    let (a, b, c) = (pts[i], pts[j], pts[k]);
                    (a.group != b.group && a.group != c.group && b.group != c.group)
                        .then(|| (Block::triple(a, b, c), m))
                },
            );
            let grouping2 = grouping.clone();
            prop::collection::vec(triple, 1..30).prop_map(move |blocks| {
                let mut ms = BlockMultiset::new();
                for (b, m) in blocks {
                    ms.add(b, m);
                }
                Design::new(grouping2.clone(), ms, DesignKind::Sbgdd { mu: 0 })
            })
        })
}

proptest! {
    #[test]
    fn text_round_trips(d in arb_design()) {
        let text = format::to_text(&d);
        let back = format::from_text(&text).unwrap();
        prop_assert_eq!(&back, &d);
        // rendering is a fixed point
        prop_assert_eq!(format::to_text(&back), text);
    }

    #[test]
    fn json_round_trips(d in arb_design()) {
        let v = format::to_json(&d);
        let back = format::from_json(&v).unwrap();
        prop_assert_eq!(back, d);
    }

    // count pair occurrences by brute force, independently of the
    // FrequencyTable plumbing
    #[test]
    fn frequency_table_matches_naive_count(d in arb_design()) {
        let table = pair_frequencies(&d.blocks, &d.grouping).unwrap();
        let mut naive: BTreeMap<(PointId, PointId), u64> = BTreeMap::new();
        for (b, &m) in d.blocks.iter() {
            for (x, y) in b.pairs() {
                *naive.entry((x.min(y), x.max(y))).or_insert(0) += m;
            }
        }
        for (a, b) in d.grouping.cross_pairs() {
            let expected = naive.get(&(a.min(b), a.max(b))).copied().unwrap_or(0);
            prop_assert_eq!(table.get(a, b), expected);
        }
    }
}
