//! Size-5 block interleaving: runs of three blocks cover thirty consecutive
//! frequencies, with dedicated head arrangements when the starting
//! frequency is not divisible by three.

use sb_core::{BlockMultiset, PointId};
use sb_ingredients::sbts::{k5_config, k5_tconfig, k5_triple, sbts5_canonical};

use crate::{relabel, InterleaveError, Result};

fn check_block(pts: &[PointId]) -> Result<()> {
    if pts.len() != 5 {
        return Err(InterleaveError::PatternMismatch(format!(
            "size-5 arrangement got a block of size {}",
            pts.len()
        )));
    }
    Ok(())
}

/// Pair indices: with block points p0 < ... < p4, pair k of the canonical
/// order is (p_i, p_j) for the k-th pair in lexicographic order. The fixed
/// canonical assignment of an SBTS(5) is {0,1,3,2,5,4,7,6,8,9}.
fn canonical_on(pts: &[PointId]) -> BlockMultiset {
    relabel(&sbts5_canonical(), pts)
}

fn alltens_on(pts: &[PointId], copies: u64) -> BlockMultiset {
    let mut ms = BlockMultiset::new();
    ms.extend_from(&relabel(&k5_triple(), pts), copies);
    ms
}

fn add_config(ms: &mut BlockMultiset, pts: &[PointId], special: (usize, usize)) {
    ms.extend_from(&relabel(&k5_config(special), pts), 1);
}

fn add_tconfig(ms: &mut BlockMultiset, pts: &[PointId], missing: (usize, usize)) {
    ms.extend_from(&relabel(&k5_tconfig(missing), pts), 1);
}

/// All nine four-triple configurations whose tripled pair is anything but
/// the second canonical pair (index 1, i.e. p0p2): adds 11 to every pair
/// except that one, which gains 9.
fn add_nine_configs(ms: &mut BlockMultiset, pts: &[PointId]) {
    for i in 0..5 {
        for j in i + 1..5 {
            if (i, j) != (0, 2) {
                add_config(ms, pts, (i, j));
            }
        }
    }
}

/// Run of three edge-disjoint size-5 blocks covering [b, b+29]; requires
/// 3 | b. Block 1 carries a shifted SBTS(5); block 2 realizes the totals
/// row {10,11,13,12,15,14,17,16,18,21}+b; block 3 realizes
/// {20,19,23,22,25,24,27,26,28,29}+b.
pub fn five_block_run(blocks: [&[PointId]; 3], b: u64) -> Result<BlockMultiset> {
    if b % 3 != 0 {
        return Err(InterleaveError::ResidueMismatch {
            mu: b,
            reason: "a run of three size-5 blocks needs a start divisible by 3".into(),
        });
    }
    for pts in blocks {
        check_block(pts)?;
    }
    let mut out = BlockMultiset::new();
    // block 1: SBTS_b(5)
    out.extend_from(&canonical_on(blocks[0]), 1);
    out.extend_from(&alltens_on(blocks[0], b / 3), 1);
    // block 2: canonical + three complete triples + one config on the
    // last pair
    out.extend_from(&canonical_on(blocks[1]), 1);
    out.extend_from(&alltens_on(blocks[1], 3 + b / 3), 1);
    add_config(&mut out, blocks[1], (3, 4));
    // block 3: canonical + three complete triples + nine configs
    out.extend_from(&canonical_on(blocks[2]), 1);
    out.extend_from(&alltens_on(blocks[2], 3 + b / 3), 1);
    add_nine_configs(&mut out, blocks[2]);
    Ok(out)
}

/// Two-block head for starts congruent to 1 mod 3, covering [mu, mu+19].
/// At mu = 1 the first block realizes {1,...,9,12} and the second
/// {10,11,13,...,20}; larger starts add complete triple multisets.
pub fn mu1_head(blocks: [&[PointId]; 2], mu: u64) -> Result<BlockMultiset> {
    if mu % 3 != 1 {
        return Err(InterleaveError::ResidueMismatch {
            mu,
            reason: "the two-block head needs a start congruent to 1 mod 3".into(),
        });
    }
    for pts in blocks {
        check_block(pts)?;
    }
    let lift = (mu - 1) / 3;
    let mut out = BlockMultiset::new();
    out.extend_from(&canonical_on(blocks[0]), 1);
    add_config(&mut out, blocks[0], (3, 4));
    out.extend_from(&alltens_on(blocks[0], lift), 1);
    out.extend_from(&canonical_on(blocks[1]), 1);
    add_nine_configs(&mut out, blocks[1]);
    out.extend_from(&alltens_on(blocks[1], lift), 1);
    Ok(out)
}

/// Run of three size-5 blocks for starts congruent to 2 mod 3, covering
/// [mu, mu+29]. At mu = 2 the totals rows are {2,3,5,4,7,6,9,8,12,13},
/// {10,11,15,14,17,16,19,18,22,23} and {20,21,25,24,27,26,29,28,30,31};
/// the second and third use six-triple systems that miss one pair.
pub fn table2_run(blocks: [&[PointId]; 3], mu: u64) -> Result<BlockMultiset> {
    if mu % 3 != 2 {
        return Err(InterleaveError::ResidueMismatch {
            mu,
            reason: "this run needs a start congruent to 2 mod 3".into(),
        });
    }
    for pts in blocks {
        check_block(pts)?;
    }
    let lift = (mu - 2) / 3;
    let mut out = BlockMultiset::new();
    // block 1: canonical + configs on the last two pairs
    out.extend_from(&canonical_on(blocks[0]), 1);
    add_config(&mut out, blocks[0], (2, 4));
    add_config(&mut out, blocks[0], (3, 4));
    out.extend_from(&alltens_on(blocks[0], lift), 1);
    // block 2: same configs plus two missing-pair systems and two
    // complete triple multisets
    out.extend_from(&canonical_on(blocks[1]), 1);
    add_config(&mut out, blocks[1], (2, 4));
    add_config(&mut out, blocks[1], (3, 4));
    add_tconfig(&mut out, blocks[1], (0, 1));
    add_tconfig(&mut out, blocks[1], (0, 2));
    out.extend_from(&alltens_on(blocks[1], 2 + lift), 1);
    // block 3: the two missing-pair systems and six complete multisets
    out.extend_from(&canonical_on(blocks[2]), 1);
    add_tconfig(&mut out, blocks[2], (0, 1));
    add_tconfig(&mut out, blocks[2], (0, 2));
    out.extend_from(&alltens_on(blocks[2], 6 + lift), 1);
    Ok(out)
}

/// Plain shifted SBTS(5) on one block; requires 3 | s.
pub fn single_five(pts: &[PointId], s: u64) -> Result<BlockMultiset> {
    if s % 3 != 0 {
        return Err(InterleaveError::ResidueMismatch {
            mu: s,
            reason: "a single size-5 block needs a start divisible by 3".into(),
        });
    }
    check_block(pts)?;
    let mut out = canonical_on(pts);
    out.extend_from(&alltens_on(pts, s / 3), 1);
    Ok(out)
}

/// One phase of a size-5 arrangement: how many consecutive blocks it
/// consumes and at which base frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FivePhase {
    /// Three blocks covering [base, base+29], 3 | base.
    Run { base: u64 },
    /// Two blocks covering [base, base+19], base congruent to 1.
    Head { base: u64 },
    /// Three blocks covering [base, base+29], base congruent to 2.
    Table2 { base: u64 },
    /// One block covering [base, base+9], 3 | base; always last.
    Single { base: u64 },
}

impl FivePhase {
    pub fn block_count(&self) -> usize {
        match self {
            FivePhase::Run { .. } | FivePhase::Table2 { .. } => 3,
            FivePhase::Head { .. } => 2,
            FivePhase::Single { .. } => 1,
        }
    }

    pub fn edges(&self) -> u64 {
        10 * self.block_count() as u64
    }
}

/// Arrange `count` size-5 blocks starting at `mu` so consecutive phases
/// abut. Feasible exactly when the total interval length 10*count is
/// compatible: mu = 0 needs count = 0,1 mod 3; mu = 1 needs count = 0,2;
/// mu = 2 needs count = 0 (all residues mod 3).
pub fn schedule_five(count: usize, mu: u64) -> Result<Vec<FivePhase>> {
    let mut phases = Vec::new();
    if count == 0 {
        return Ok(phases);
    }
    let mut left = count;
    let mut s = mu;
    match (mu % 3, count % 3) {
        (0, 0) | (0, 1) => {}
        (1, 0) | (1, 2) => {
            if left < 2 {
                return Err(InterleaveError::Unschedulable { count, mu });
            }
            phases.push(FivePhase::Head { base: s });
            left -= 2;
            s += 20;
        }
        (2, 0) => {
            while left > 0 {
                phases.push(FivePhase::Table2 { base: s });
                left -= 3;
                s += 30;
            }
            return Ok(phases);
        }
        _ => return Err(InterleaveError::Unschedulable { count, mu }),
    }
    // here 3 | s; runs of three, with a possible single leftover last
    while left >= 3 && !(left == 4) {
        phases.push(FivePhase::Run { base: s });
        left -= 3;
        s += 30;
    }
    match left {
        0 => {}
        1 => phases.push(FivePhase::Single { base: s }),
        4 => {
            phases.push(FivePhase::Run { base: s });
            phases.push(FivePhase::Single { base: s + 30 });
        }
        _ => return Err(InterleaveError::Unschedulable { count, mu }),
    }
    Ok(phases)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sb_core::{pair_frequencies, GroupedPointSet};

    fn pts(range: std::ops::Range<usize>) -> Vec<PointId> {
        range.map(|i| PointId::new(i, 0)).collect()
    }

    fn freqs_of(ms: &BlockMultiset, v: usize) -> Vec<u64> {
        let g = GroupedPointSet::uniform(1, v);
        let mut f = pair_frequencies(ms, &g).unwrap().value_multiset();
        f.sort_unstable();
        f
    }

    #[test]
    fn run_rows_match_fixed_totals() {
        let a = pts(0..5);
        let b = pts(5..10);
        let c = pts(10..15);
        let ms = five_block_run([&a, &b, &c], 0).unwrap();
        // per-block totals rows at b = 0
        let g = GroupedPointSet::uniform(1, 15);
        let table = pair_frequencies(&ms, &g).unwrap();
        let row = |base: usize| -> Vec<u64> {
            let mut out = Vec::new();
            for i in 0..5 {
                for j in i + 1..5 {
                    out.push(table.get(PointId::new(base + i, 0), PointId::new(base + j, 0)));
                }
            }
            out
        };
        assert_eq!(row(0), vec![0, 1, 3, 2, 5, 4, 7, 6, 8, 9]);
        assert_eq!(row(5), vec![10, 11, 13, 12, 15, 14, 17, 16, 18, 21]);
        assert_eq!(row(10), vec![20, 19, 23, 22, 25, 24, 27, 26, 28, 29]);
    }

    #[test]
    fn mu1_head_covers_twenty() {
        let a = pts(0..5);
        let b = pts(5..10);
        let ms = mu1_head([&a, &b], 1).unwrap();
        let nonzero: Vec<u64> = freqs_of(&ms, 10).into_iter().filter(|&f| f > 0).collect();
        assert_eq!(nonzero, (1..=20).collect::<Vec<u64>>());
        let ms = mu1_head([&a, &b], 7).unwrap();
        let nonzero: Vec<u64> = freqs_of(&ms, 10).into_iter().filter(|&f| f > 0).collect();
        assert_eq!(nonzero, (7..=26).collect::<Vec<u64>>());
    }

    #[test]
    fn table2_rows_match_fixed_totals() {
        let a = pts(0..5);
        let b = pts(5..10);
        let c = pts(10..15);
        let ms = table2_run([&a, &b, &c], 2).unwrap();
        let g = GroupedPointSet::uniform(1, 15);
        let table = pair_frequencies(&ms, &g).unwrap();
        let row = |base: usize| -> Vec<u64> {
            let mut out = Vec::new();
            for i in 0..5 {
                for j in i + 1..5 {
                    out.push(table.get(PointId::new(base + i, 0), PointId::new(base + j, 0)));
                }
            }
            out
        };
        assert_eq!(row(0), vec![2, 3, 5, 4, 7, 6, 9, 8, 12, 13]);
        assert_eq!(row(5), vec![10, 11, 15, 14, 17, 16, 19, 18, 22, 23]);
        assert_eq!(row(10), vec![20, 21, 25, 24, 27, 26, 29, 28, 30, 31]);
    }

    #[test]
    fn schedules_cover_and_refuse() {
        for (count, mu, ok) in [
            (9, 0, true),
            (10, 0, true),
            (11, 0, false),
            (2, 1, true),
            (9, 1, true),
            (8, 1, true),
            (7, 1, false),
            (9, 2, true),
            (8, 2, false),
            (1, 0, true),
            (4, 0, true),
        ] {
            let r = schedule_five(count, mu);
            assert_eq!(r.is_ok(), ok, "count={count} mu={mu}");
            if let Ok(phases) = r {
                let mut s = mu;
                let mut blocks = 0;
                for (i, p) in phases.iter().enumerate() {
                    let base = match *p {
                        FivePhase::Run { base }
                        | FivePhase::Head { base }
                        | FivePhase::Table2 { base }
                        | FivePhase::Single { base } => base,
                    };
                    assert_eq!(base, s);
                    if let FivePhase::Single { .. } = p {
                        assert_eq!(i, phases.len() - 1, "single leftover must come last");
                    }
                    s += p.edges();
                    blocks += p.block_count();
                }
                assert_eq!(blocks, count);
                assert_eq!(s, mu + 10 * count as u64);
            }
        }
    }
}
