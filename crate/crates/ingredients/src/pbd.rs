//! Pairwise balanced designs with block sizes {3,4,5}, used as masters when
//! the group count does not fit any direct construction.

use sb_core::{
    verify, Block, BlockMultiset, Design, DesignKind, GroupedPointSet, PointId,
};
use sb_search::{Dlx, DlxResult};

use crate::catalog;
use crate::error::{IngredientError, Result};
use crate::latin::latin_square;
use crate::td::td;

fn pt(i: usize) -> PointId {
    PointId::new(i, 0)
}

fn pbd_design(u: usize, blocks: BlockMultiset) -> Design {
    let d = Design::new(
        GroupedPointSet::uniform(1, u),
        blocks,
        DesignKind::Pbd {
            sizes: vec![3, 4, 5],
        },
    );
    debug_assert!(verify(&d).pass, "PBD({u}) failed verification");
    d
}

fn single_block(u: usize) -> Design {
    let mut ms = BlockMultiset::new();
    ms.add(Block::new((0..u).map(pt).collect()), 1);
    pbd_design(u, ms)
}

fn fano() -> Design {
    let mut ms = BlockMultiset::new();
    for i in 0..7 {
        ms.add(Block::triple(pt(i), pt((i + 1) % 7), pt((i + 3) % 7)), 1);
    }
    pbd_design(7, ms)
}

/// Relabel a uniform-grouped design to singleton groups, group g slot s
/// becoming point offset(g) + s; an extra point index may stand for a new
/// point adjoined to every group.
fn flatten(d: &Design) -> (Vec<usize>, BlockMultiset) {
    let sizes = d.grouping.group_sizes();
    let mut offsets = vec![0usize];
    for &s in sizes {
        offsets.push(offsets.last().unwrap() + s);
    }
    let mut ms = BlockMultiset::new();
    for (block, &mult) in d.blocks.iter() {
        let pts: Vec<PointId> = block
            .points()
            .iter()
            .map(|p| pt(offsets[p.group as usize] + p.slot as usize))
            .collect();
        ms.add(Block::new(pts), mult);
    }
    (offsets, ms)
}

/// Fill each group of a flattened master with a recursive PBD; when
/// `adjoin` is set, one shared new point joins every group fill.
fn groups_plus_fills(master: &Design, adjoin: bool) -> Result<BlockMultiset> {
    let (offsets, mut ms) = flatten(master);
    let total = *offsets.last().unwrap();
    for g in 0..master.grouping.num_groups() {
        let mut members: Vec<usize> = (offsets[g]..offsets[g + 1]).collect();
        if adjoin {
            members.push(total);
        }
        if members.len() < 3 {
            continue;
        }
        let fill = pbd_345(members.len())?;
        for (block, &mult) in fill.blocks.iter() {
            let pts: Vec<PointId> = block
                .points()
                .iter()
                .map(|p| pt(members[p.group as usize]))
                .collect();
            ms.add(Block::new(pts), mult);
        }
    }
    Ok(ms)
}

/// TD(k, m) with the last group cut down to its first t slots. Blocks keep
/// size k or drop to k-1.
fn truncated_td(k: usize, m: usize, t: usize) -> Result<Design> {
    let full = td(k, m)?;
    let mut sizes = full.grouping.group_sizes().to_vec();
    sizes[k - 1] = t;
    let mut ms = BlockMultiset::new();
    for (block, &mult) in full.blocks.iter() {
        let pts: Vec<PointId> = block
            .points()
            .iter()
            .filter(|p| (p.group as usize) < k - 1 || (p.slot as usize) < t)
            .copied()
            .collect();
        ms.add(Block::new(pts), mult);
    }
    Ok(Design::new(
        GroupedPointSet::new(sizes),
        ms,
        DesignKind::Gdd {
            lambda: 1,
            sizes: vec![k - 1, k],
        },
    ))
}

/// Triple master on three groups of size m (a latin square), groups filled
/// recursively, optionally through a shared adjoined point.
fn three_group_route(m: usize, adjoin: bool) -> Result<Design> {
    let master = latin_square(m).to_design();
    let ms = groups_plus_fills(&master, adjoin)?;
    Ok(pbd_design(3 * m + adjoin as usize, ms))
}

fn truncated_route(k: usize, m: usize, t: usize) -> Result<Design> {
    let master = truncated_td(k, m, t)?;
    let ms = groups_plus_fills(&master, false)?;
    Ok(pbd_design((k - 1) * m + t, ms))
}

/// Exhaustive certificate that the point count admits no {3,4,5}-cover
/// with every pair exactly once.
pub fn certify_pbd_infeasible(u: usize) -> bool {
    let n_pairs = u * (u - 1) / 2;
    let pair_col = |a: usize, b: usize| -> usize {
        // a < b
        a * u - a * (a + 1) / 2 + (b - a - 1)
    };
    let mut rows = Vec::new();
    let candidates = candidate_subsets(u);
    for set in &candidates {
        let mut cols = Vec::new();
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                cols.push(pair_col(set[i], set[j]));
            }
        }
        rows.push(cols);
    }
    let mut dlx = Dlx::new(n_pairs, &rows);
    matches!(dlx.solve(200_000_000), DlxResult::Infeasible)
}

fn candidate_subsets(u: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 0usize)];
    while let Some((cur, next)) = stack.pop() {
        if (3..=5).contains(&cur.len()) {
            out.push(cur.clone());
        }
        if cur.len() == 5 {
            continue;
        }
        for i in next..u {
            let mut ext = cur.clone();
            ext.push(i);
            stack.push((ext, i + 1));
        }
    }
    out
}

/// Pairwise balanced design on u points with block sizes in {3,4,5}.
/// Exists for all u >= 3 except u in {6, 8}.
pub fn pbd_345(u: usize) -> Result<Design> {
    match u {
        0..=2 => Err(IngredientError::OutsideRange(format!(
            "no pairs to balance on {u} points"
        ))),
        3 | 4 | 5 => Ok(single_block(u)),
        6 | 8 => {
            debug_assert!(certify_pbd_infeasible(u));
            Err(IngredientError::Nonexistent(format!(
                "no {{3,4,5}}-PBD on {u} points"
            )))
        }
        7 => Ok(fano()),
        9 => three_group_route(3, false),
        10 => three_group_route(3, true),
        11 => catalog::global()?.design("pbd_11"),
        12 => three_group_route(4, false),
        13 => three_group_route(4, true),
        14 => catalog::global()?.design("pbd_14"),
        15 => three_group_route(5, false),
        _ => {
            if u % 3 == 0 && pbd_345(u / 3).is_ok() {
                return three_group_route(u / 3, false);
            }
            if u % 3 == 1 && pbd_345((u - 1) / 3 + 1).is_ok() {
                return three_group_route((u - 1) / 3, true);
            }
            // truncated transversal masters: u = (k-1)m + t with the stub
            // group of size t in {1,3,4,5}
            for k in [4usize, 5] {
                for t in [1usize, 3, 4, 5] {
                    if u <= t {
                        continue;
                    }
                    let rem = u - t;
                    if rem % (k - 1) != 0 {
                        continue;
                    }
                    let m = rem / (k - 1);
                    if t > m || m < 3 {
                        continue;
                    }
                    if td(k, m).is_err() || pbd_345(m).is_err() {
                        continue;
                    }
                    if t >= 3 && pbd_345(t).is_err() {
                        continue;
                    }
                    return truncated_route(k, m, t);
                }
            }
            Err(IngredientError::OutsideRange(format!(
                "no master found for a {{3,4,5}}-PBD on {u} points"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        for u in [3, 4, 5, 7, 9, 10, 12, 13, 15] {
            let d = pbd_345(u).unwrap();
            assert!(verify(&d).pass, "PBD({u})");
        }
    }

    #[test]
    fn six_and_eight_refused() {
        for u in [6, 8] {
            assert!(matches!(pbd_345(u), Err(IngredientError::Nonexistent(_))));
            assert!(certify_pbd_infeasible(u));
        }
    }

    #[test]
    fn recursive_orders() {
        for u in 16..=30 {
            let d = pbd_345(u).unwrap();
            assert!(verify(&d).pass, "PBD({u})");
        }
    }
}
