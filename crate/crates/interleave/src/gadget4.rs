//! Starting gadget on five size-4 blocks: a central block {a,b,c,d} and
//! four corner blocks through a, b, c, d in pairs joined at two extra
//! points x and y. Together their thirty pairs receive exactly the
//! frequencies 0..29, which no single sequence of size-4 blocks can do
//! because a triple system on four points cannot realize an interval
//! starting at zero.

use sb_core::{Block, BlockMultiset, PointId};
use sb_search::exactsmall::solve_k4;

use crate::{InterleaveError, Result};

fn singleton_meet(p: &[PointId], q: &[PointId]) -> Result<PointId> {
    let common: Vec<PointId> = p.iter().copied().filter(|x| q.contains(x)).collect();
    if common.len() == 1 {
        Ok(common[0])
    } else {
        Err(InterleaveError::PatternMismatch(format!(
            "blocks share {} points where exactly one is required",
            common.len()
        )))
    }
}

fn triple(a: PointId, b: PointId, c: PointId) -> Block {
    Block::triple(a, b, c)
}

/// Realize the internal pair targets on one corner block: the hub pair gets
/// `hub_target` and the other five pairs take `free` in some order. The
/// first realizable assignment in permutation order is used, which is
/// deterministic.
fn corner(pts: &[PointId], hub: (PointId, PointId), hub_target: i64, free: [i64; 5]) -> Result<BlockMultiset> {
    let mut sorted = pts.to_vec();
    sorted.sort();
    let pairs: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let hub_idx = pairs
        .iter()
        .position(|&(i, j)| {
            let (p, q) = (sorted[i], sorted[j]);
            (p, q) == hub || (q, p) == hub
        })
        .ok_or_else(|| InterleaveError::PatternMismatch("hub pair not inside its block".into()))?;
    let others: Vec<usize> = (0..6).filter(|&k| k != hub_idx).collect();
    let mut perm = [0usize, 1, 2, 3, 4];
    loop {
        let mut f = [0i64; 6];
        f[hub_idx] = hub_target;
        for (slot, &which) in others.iter().zip(perm.iter()) {
            f[*slot] = free[which];
        }
        if let Some(y) = solve_k4(&f) {
            let mut ms = BlockMultiset::new();
            for (p, &m) in y.iter().enumerate() {
                if m > 0 {
                    let tri: Vec<PointId> = (0..4).filter(|&t| t != p).map(|t| sorted[t]).collect();
                    ms.add(Block::new(tri), m as u64);
                }
            }
            return Ok(ms);
        }
        if !next_permutation(&mut perm) {
            return Err(InterleaveError::PatternMismatch(
                "no assignment of corner-block targets is realizable".into(),
            ));
        }
    }
}

fn next_permutation(p: &mut [usize; 5]) -> bool {
    let n = p.len();
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Five size-4 blocks in the starting pattern: blocks[0] = {a,b,c,d},
/// blocks[1] and blocks[2] meet it in a and b and each other in x,
/// blocks[3] and blocks[4] meet it in c and d and each other in y. The
/// output covers their thirty pairs with frequencies exactly 0..29: the
/// central block gets {0,...,5}, and corner block i gets the six values
/// [6i, 6i+5] with the hub pair (through x or y) at 6i+2, three of which
/// arrive from the central block's patch triples.
pub fn start_gadget_4(blocks: [&[PointId]; 5]) -> Result<BlockMultiset> {
    for b in blocks {
        if b.len() != 4 {
            return Err(InterleaveError::PatternMismatch(format!(
                "starting pattern needs size-4 blocks, got size {}",
                b.len()
            )));
        }
    }
    let a = singleton_meet(blocks[0], blocks[1])?;
    let b = singleton_meet(blocks[0], blocks[2])?;
    let c = singleton_meet(blocks[0], blocks[3])?;
    let d = singleton_meet(blocks[0], blocks[4])?;
    let x = singleton_meet(blocks[1], blocks[2])?;
    let y = singleton_meet(blocks[3], blocks[4])?;
    let mut central = vec![a, b, c, d];
    central.sort();
    let mut given = blocks[0].to_vec();
    given.sort();
    if central != given || blocks[0].contains(&x) || blocks[0].contains(&y) || x == y {
        return Err(InterleaveError::PatternMismatch(
            "central block must meet the four corner blocks in four distinct points".into(),
        ));
    }
    let mut out = BlockMultiset::new();
    // central block: frequencies ad=0, ac=1, bd=2, bc=3, ab=4, cd=5
    out.add(triple(a, b, c), 1);
    out.add(triple(b, c, d), 2);
    // patch triples: push ab to 4 and cd to 5 while front-loading 3 onto
    // the two hub pairs ax and cy's partners
    out.add(triple(a, b, x), 3);
    out.add(triple(c, d, y), 3);
    // corner blocks: block i covers [6i, 6i+5] with the hub at 6i+2, of
    // which 3 is already present externally
    let hubs = [(a, x), (b, x), (c, y), (d, y)];
    for i in 0..4 {
        let base = 6 * (i as i64 + 1);
        let hub_target = base + 2 - 3;
        let free = [base, base + 1, base + 3, base + 4, base + 5];
        out.extend_from(&corner(blocks[i + 1], hubs[i], hub_target, free)?, 1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sb_core::{pair_frequencies, GroupedPointSet};

    #[test]
    fn gadget_covers_zero_to_twentynine() {
        // singleton model: 14 points, blocks in pattern
        let p: Vec<PointId> = (0..14).map(|i| PointId::new(i, 0)).collect();
        let b0 = vec![p[0], p[1], p[2], p[3]];
        let b1 = vec![p[0], p[4], p[5], p[6]];
        let b2 = vec![p[1], p[4], p[7], p[8]];
        let b3 = vec![p[2], p[9], p[10], p[11]];
        let b4 = vec![p[3], p[9], p[12], p[13]];
        let ms = start_gadget_4([&b0, &b1, &b2, &b3, &b4]).unwrap();
        let g = GroupedPointSet::uniform(1, 14);
        let table = pair_frequencies(&ms, &g).unwrap();
        let mut nonzero: Vec<u64> = table
            .value_multiset()
            .into_iter()
            .filter(|&f| f > 0)
            .collect();
        nonzero.sort_unstable();
        assert_eq!(nonzero, (1..=29).collect::<Vec<u64>>());
        // the zero frequency sits on the central pair {a,d}
        assert_eq!(table.get(p[0], p[3]), 0);
        assert_eq!(table.get(p[2], p[3]), 5);
        assert_eq!(table.get(p[0], p[1]), 4);
        // hub pairs carry 8, 14, 20, 26
        assert_eq!(table.get(p[0], p[4]), 8);
        assert_eq!(table.get(p[1], p[4]), 14);
        assert_eq!(table.get(p[2], p[9]), 20);
        assert_eq!(table.get(p[3], p[9]), 26);
    }

    #[test]
    fn pattern_violations_are_rejected() {
        let p: Vec<PointId> = (0..16).map(|i| PointId::new(i, 0)).collect();
        let b0 = vec![p[0], p[1], p[2], p[3]];
        let b1 = vec![p[0], p[4], p[5], p[6]];
        let b2 = vec![p[1], p[7], p[8], p[9]]; // does not meet b1
        let b3 = vec![p[2], p[10], p[11], p[12]];
        let b4 = vec![p[3], p[10], p[13], p[14]];
        assert!(start_gadget_4([&b0, &b1, &b2, &b3, &b4]).is_err());
    }
}
