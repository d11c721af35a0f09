//! Block replacement: inflate every point of a master design by a weight m
//! and lay an interval tile over each block, scheduled so the tiles'
//! frequency ranges abut into one interval.
//!
//! Block sizes are handled by different tiles: size 5 at weight 1 needs the
//! run/head arrangements (a single size-5 tile only starts at multiples of
//! 3), size 5 at weight coprime to 3 goes through an incomplete design
//! whose hole is filled during the size-5 phase, and size 4 at weight 1
//! starting from frequency zero needs the five-block starting gadget.

use sb_core::{
    verify, Block, BlockMultiset, Design, DesignKind, GroupedPointSet, PointId,
    Violation,
};
use sb_ingredients::{igdd3_5, sbts};
use sb_interleave::{
    five_block_run, mu1_head, relabel, schedule_five, single_five, start_gadget_4, table2_run,
    FivePhase,
};

use crate::manifest::Piece;
use crate::{AssembleError, Result};

/// Copy `copy` of master point p after inflation by weight m.
fn inflate_point(p: PointId, m: usize, copy: usize) -> PointId {
    PointId::new(p.group as usize, p.slot as usize * m + copy)
}

/// Map a tile on type m^k onto a master block: tile group i lands on the m
/// copies of the block's i-th point.
fn map_onto(ms: &BlockMultiset, block_pts: &[PointId], m: usize) -> BlockMultiset {
    let mut out = BlockMultiset::new();
    for (b, &mult) in ms.iter() {
        let mapped: Vec<PointId> = b
            .points()
            .iter()
            .map(|q| inflate_point(block_pts[q.group as usize], m, q.slot as usize))
            .collect();
        out.add(Block::new(mapped), mult);
    }
    out
}

fn label(pts: &[PointId]) -> String {
    pts.iter()
        .map(|p| format!("{}.{}", p.group, p.slot))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Union parts into a claimed SBGDD and verify the claim.
pub fn assemble_tiles(
    grouping: GroupedPointSet,
    mu: u64,
    parts: Vec<BlockMultiset>,
) -> Result<Design> {
    let mut blocks = BlockMultiset::new();
    for p in parts {
        blocks.extend_from(&p, 1);
    }
    let d = Design::new(grouping, blocks, DesignKind::Sbgdd { mu });
    let report = verify(&d);
    if report.pass {
        Ok(d)
    } else {
        Err(defect(report.violation))
    }
}

fn defect(v: Option<Violation>) -> AssembleError {
    AssembleError::Defect(match v {
        Some(v) => v.to_string(),
        None => "verification failed".into(),
    })
}

/// Inflate a simple master design (GDD, TD or PBD, block sizes 3..6) by
/// weight m into an SBGDD starting at mu. Public entry: checks and records
/// nothing about strategy; `construct` wraps it with dispatch.
pub fn inflate_gdd(master: &Design, m: usize, mu: u64) -> Result<Design> {
    let mut pieces = Vec::new();
    replace_blocks(master, m, mu, &mut pieces)
}

/// The engine behind `inflate_gdd` and the TD templates; appends one piece
/// record per tile placed.
pub(crate) fn replace_blocks(
    master: &Design,
    m: usize,
    mu: u64,
    pieces: &mut Vec<Piece>,
) -> Result<Design> {
    assert!(m >= 1);
    let sizes: Vec<usize> = master.grouping.group_sizes().iter().map(|&s| s * m).collect();
    let grouping = GroupedPointSet::new(sizes);

    let mut fives: Vec<Vec<PointId>> = Vec::new();
    let mut sixes: Vec<Vec<PointId>> = Vec::new();
    let mut fours: Vec<Vec<PointId>> = Vec::new();
    let mut threes: Vec<Vec<PointId>> = Vec::new();
    for (b, &mult) in master.blocks.iter() {
        if mult != 1 {
            return Err(AssembleError::Defect(
                "master design must have simple blocks".into(),
            ));
        }
        let pts = b.points().to_vec();
        match pts.len() {
            3 => threes.push(pts),
            4 => fours.push(pts),
            5 => fives.push(pts),
            6 => sixes.push(pts),
            n => {
                return Err(AssembleError::OutsideRange(format!(
                    "no tile for master blocks of size {n}"
                )))
            }
        }
    }
    if m == 1 && !threes.is_empty() {
        return Err(AssembleError::OutsideRange(
            "size-3 master blocks cannot be replaced at weight 1".into(),
        ));
    }

    let mut parts: Vec<BlockMultiset> = Vec::new();
    let mut s = mu;

    // size-5 blocks first: their tiles constrain the starting residue, and
    // placing them up front keeps every later tile's start positive
    if !fives.is_empty() {
        if m == 1 {
            five_phase_weight_one(&fives, mu, None, &mut parts, pieces)?;
            s += 10 * fives.len() as u64;
        } else if m % 3 == 0 {
            for pts in &fives {
                let tile = crate::construct(m, 5, s)?;
                parts.push(map_onto(&tile.blocks, pts, m));
                pieces.push(Piece {
                    name: format!("sbgdd {m}^5", m = m),
                    start: s,
                    block: Some(label(pts)),
                });
                s += (10 * m * m) as u64;
            }
        } else {
            s = five_phase_incomplete(&fives, m, mu, &mut parts, pieces)?;
        }
    }

    for pts in &sixes {
        if m != 1 {
            return Err(AssembleError::OutsideRange(
                "size-6 master blocks only replace at weight 1".into(),
            ));
        }
        let tile = sbts(6, s)?;
        parts.push(relabel(&tile.blocks, pts));
        pieces.push(Piece {
            name: "sbts(6)".into(),
            start: s,
            block: Some(label(pts)),
        });
        s += 15;
    }

    if !fours.is_empty() {
        if m == 1 {
            let mut rest: &[Vec<PointId>] = &fours;
            if s == 0 {
                // an interval cannot start at zero on a lone size-4 block;
                // open with the five-block gadget covering 0..29
                let (gadget, used) = gadget_head(&fours)?;
                parts.push(gadget);
                pieces.push(Piece {
                    name: "start-gadget".into(),
                    start: 0,
                    block: Some(
                        used.iter().map(|i| label(&fours[*i])).collect::<Vec<_>>().join(" | "),
                    ),
                });
                s = 30;
                let keep: Vec<Vec<PointId>> = fours
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !used.contains(i))
                    .map(|(_, b)| b.clone())
                    .collect();
                for pts in &keep {
                    let tile = sbts(4, s)?;
                    parts.push(relabel(&tile.blocks, pts));
                    pieces.push(Piece {
                        name: "sbts(4)".into(),
                        start: s,
                        block: Some(label(pts)),
                    });
                    s += 6;
                }
                rest = &[];
            }
            for pts in rest {
                let tile = sbts(4, s)?;
                parts.push(relabel(&tile.blocks, pts));
                pieces.push(Piece {
                    name: "sbts(4)".into(),
                    start: s,
                    block: Some(label(pts)),
                });
                s += 6;
            }
        } else {
            for pts in &fours {
                let tile = crate::construct(m, 4, s)?;
                parts.push(map_onto(&tile.blocks, pts, m));
                pieces.push(Piece {
                    name: format!("sbgdd {m}^4"),
                    start: s,
                    block: Some(label(pts)),
                });
                s += (6 * m * m) as u64;
            }
        }
    }

    for pts in &threes {
        let tile = crate::construct(m, 3, s)?;
        parts.push(map_onto(&tile.blocks, pts, m));
        pieces.push(Piece {
            name: format!("sbgdd {m}^3"),
            start: s,
            block: Some(label(pts)),
        });
        s += (3 * m * m) as u64;
    }

    let expected_end = mu + grouping.num_cross_pairs() as u64;
    if s != expected_end {
        return Err(AssembleError::Defect(format!(
            "tiles cover up to {s}, expected {expected_end}"
        )));
    }
    assemble_tiles(grouping, mu, parts)
}

/// Lay SBTS(5) tiles over size-5 point sets (weight-1 blocks, or the hole
/// points of an incomplete replacement) so their intervals abut from mu.
fn five_phase_weight_one(
    blocks: &[Vec<PointId>],
    mu: u64,
    name: Option<&str>,
    parts: &mut Vec<BlockMultiset>,
    pieces: &mut Vec<Piece>,
) -> Result<()> {
    let phases = schedule_five(blocks.len(), mu)?;
    let name = name.unwrap_or("sbts(5)");
    let mut i = 0;
    for ph in phases {
        let (ms, taken) = match ph {
            FivePhase::Run { base } => (
                five_block_run(
                    [blocks[i].as_slice(), blocks[i + 1].as_slice(), blocks[i + 2].as_slice()],
                    base,
                )?,
                3,
            ),
            FivePhase::Head { base } => (
                mu1_head([blocks[i].as_slice(), blocks[i + 1].as_slice()], base)?,
                2,
            ),
            FivePhase::Table2 { base } => (
                table2_run(
                    [blocks[i].as_slice(), blocks[i + 1].as_slice(), blocks[i + 2].as_slice()],
                    base,
                )?,
                3,
            ),
            FivePhase::Single { base } => (single_five(&blocks[i], base)?, 1),
        };
        let base = match ph {
            FivePhase::Run { base }
            | FivePhase::Head { base }
            | FivePhase::Table2 { base }
            | FivePhase::Single { base } => base,
        };
        for k in 0..taken {
            pieces.push(Piece {
                name: name.into(),
                start: base,
                block: Some(label(&blocks[i + k])),
            });
        }
        parts.push(ms);
        i += taken;
    }
    Ok(())
}

/// Size-5 blocks at weight m with 3 not dividing m: fill each block's hole
/// (the slot-0 copies) with an SBTS(5) during a joint size-5 phase, then
/// lay the incomplete (m;1)^5 interval design over the remaining pairs,
/// lifted into place by copies of the index-1 incomplete GDD.
fn five_phase_incomplete(
    fives: &[Vec<PointId>],
    m: usize,
    mu: u64,
    parts: &mut Vec<BlockMultiset>,
    pieces: &mut Vec<Piece>,
) -> Result<u64> {
    let holes: Vec<Vec<PointId>> = fives
        .iter()
        .map(|pts| pts.iter().map(|&p| inflate_point(p, m, 0)).collect())
        .collect();
    five_phase_weight_one(&holes, mu, Some("hole sbts(5)"), parts, pieces)?;

    let base = incomplete_five_base(m)?;
    let lifter = igdd3_5(m)?;
    let body_len = (10 * (m * m - 1)) as u64;
    let mut s = mu + 10 * fives.len() as u64;
    for pts in fives {
        // the stored incomplete design starts at 10; lift the difference
        let mut body = base.blocks.clone();
        body.extend_from(&lifter.blocks, s - 10);
        parts.push(map_onto(&body, pts, m));
        pieces.push(Piece {
            name: format!("isbgdd ({m};1)^5"),
            start: s,
            block: Some(label(pts)),
        });
        s += body_len;
    }
    Ok(s)
}

fn incomplete_five_base(m: usize) -> Result<Design> {
    match m {
        2 | 4 | 5 => Ok(sb_ingredients::catalog::global()?.design(&format!("isbgdd_{m}_5"))?),
        _ => Err(AssembleError::OutsideRange(format!(
            "no stored incomplete interval design of type ({m};1)^5"
        ))),
    }
}

/// Find five size-4 blocks of a simple design in the starting pattern and
/// realize the gadget on them; returns the covering multiset and the
/// indices of the blocks consumed.
fn gadget_head(fours: &[Vec<PointId>]) -> Result<(BlockMultiset, Vec<usize>)> {
    let n = fours.len();
    let meets = |i: usize, j: usize| -> Vec<PointId> {
        fours[i]
            .iter()
            .copied()
            .filter(|p| fours[j].contains(p))
            .collect()
    };
    for i0 in 0..n {
        let b0 = &fours[i0];
        // corner candidates per central point: blocks meeting B0 exactly there
        let corner_candidates: Vec<Vec<usize>> = b0
            .iter()
            .map(|&p| {
                (0..n)
                    .filter(|&j| j != i0 && fours[j].contains(&p) && meets(i0, j).len() == 1)
                    .collect()
            })
            .collect();
        // pair up the central points: (0,1)+(2,3), (0,2)+(1,3), (0,3)+(1,2)
        for (pair_a, pair_b) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))] {
            for &i1 in &corner_candidates[pair_a.0] {
                for &i2 in &corner_candidates[pair_a.1] {
                    if i2 == i1 {
                        continue;
                    }
                    let x = match meets(i1, i2).as_slice() {
                        [x] if !b0.contains(x) => *x,
                        _ => continue,
                    };
                    for &i3 in &corner_candidates[pair_b.0] {
                        if i3 == i1 || i3 == i2 {
                            continue;
                        }
                        for &i4 in &corner_candidates[pair_b.1] {
                            if i4 == i1 || i4 == i2 || i4 == i3 {
                                continue;
                            }
                            match meets(i3, i4).as_slice() {
                                [y] if !b0.contains(y) && *y != x => {}
                                _ => continue,
                            }
                            if let Ok(ms) = start_gadget_4([
                                fours[i0].as_slice(),
                                fours[i1].as_slice(),
                                fours[i2].as_slice(),
                                fours[i3].as_slice(),
                                fours[i4].as_slice(),
                            ]) {
                                return Ok((ms, vec![i0, i1, i2, i3, i4]));
                            }
                        }
                    }
                }
            }
        }
    }
    Err(AssembleError::Defect(
        "no starting pattern among the size-4 blocks".into(),
    ))
}
