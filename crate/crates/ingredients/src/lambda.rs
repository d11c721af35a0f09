//! Triple GDDs of type m^u with index lambda, for u in {3,4,5,6,8}, built
//! from a handful of small bases by weight inflation and replication.

use std::collections::BTreeMap;

use sb_core::{
    verify_gdd, Block, BlockMultiset, Design, DesignKind, GroupedPointSet, HoleSpec,
    PointId,
};

use crate::catalog;
use crate::error::{IngredientError, Result};
use crate::latin::latin_square;
use crate::smallgdd;

/// Replace every triple of `base` by the triples of a TD(3, w) laid across
/// the three inflated point classes. Point (g, s) becomes the class
/// (g, s*w .. s*w + w).
pub fn weight_inflate(base: &Design, w: usize) -> Design {
    assert!(w >= 1);
    if w == 1 {
        return base.clone();
    }
    let sizes: Vec<usize> = base.grouping.group_sizes().iter().map(|&s| s * w).collect();
    let mut blocks = BlockMultiset::new();
    for (block, &mult) in base.blocks.iter() {
        let pts = block.points();
        assert_eq!(pts.len(), 3, "weight inflation is defined on triples");
        for i in 0..w {
            for j in 0..w {
                let k = (i + j) % w;
                blocks.add(
                    Block::triple(
                        inflate_point(pts[0], w, i),
                        inflate_point(pts[1], w, j),
                        inflate_point(pts[2], w, k),
                    ),
                    mult,
                );
            }
        }
    }
    Design::new(GroupedPointSet::new(sizes), blocks, base.kind.clone())
}

fn inflate_point(p: PointId, w: usize, offset: usize) -> PointId {
    PointId::new(p.group as usize, p.slot as usize * w + offset)
}

fn replicate(mut d: Design, t: u64) -> Design {
    assert!(t >= 1);
    if t > 1 {
        let base = d.blocks.clone();
        d.blocks.extend_from(&base, t - 1);
    }
    if let DesignKind::Gdd { lambda, sizes } = &d.kind {
        d.kind = DesignKind::Gdd {
            lambda: lambda * t,
            sizes: sizes.clone(),
        };
    }
    d
}

fn gdd_kind(lambda: u64) -> DesignKind {
    DesignKind::Gdd {
        lambda,
        sizes: vec![3],
    }
}

fn all_k4_triples() -> Design {
    let mut ms = BlockMultiset::new();
    for a in 0..4usize {
        for b in a + 1..4 {
            for c in b + 1..4 {
                ms.add(
                    Block::triple(PointId::new(a, 0), PointId::new(b, 0), PointId::new(c, 0)),
                    1,
                );
            }
        }
    }
    Design::new(GroupedPointSet::uniform(1, 4), ms, gdd_kind(2))
}

fn all_k5_triples() -> Design {
    let mut ms = BlockMultiset::new();
    for a in 0..5usize {
        for b in a + 1..5 {
            for c in b + 1..5 {
                ms.add(
                    Block::triple(PointId::new(a, 0), PointId::new(b, 0), PointId::new(c, 0)),
                    1,
                );
            }
        }
    }
    Design::new(GroupedPointSet::uniform(1, 5), ms, gdd_kind(3))
}

/// Expand each block of a master design into an aligned ingredient GDD on
/// the w-fold inflation of the block's points. `pieces` maps block size to
/// a triple GDD of type w^size whose group i lands on the block's i-th
/// point (in sorted order). All pieces must share one lambda.
pub fn inflate_by_gdd(
    master: &Design,
    w: usize,
    pieces: &BTreeMap<usize, Design>,
    lambda: u64,
) -> Design {
    let sizes: Vec<usize> = master
        .grouping
        .group_sizes()
        .iter()
        .map(|&s| s * w)
        .collect();
    let mut blocks = BlockMultiset::new();
    for (block, &mult) in master.blocks.iter() {
        let pts = block.points();
        let piece = pieces
            .get(&pts.len())
            .unwrap_or_else(|| panic!("no ingredient for block size {}", pts.len()));
        for (pb, &pm) in piece.blocks.iter() {
            let mapped: Vec<PointId> = pb
                .points()
                .iter()
                .map(|q| inflate_point(pts[q.group as usize], w, q.slot as usize))
                .collect();
            blocks.add(Block::new(mapped), mult * pm);
        }
    }
    Design::new(GroupedPointSet::new(sizes), blocks, gdd_kind(lambda))
}

/// Triple GDD of type m^u with index lambda. Exists for u in {3,4,5,6,8}
/// under the classical divisibility conditions; u=3 is unconditional.
pub fn lambda_gdd3(m: usize, u: usize, lambda: u64) -> Result<Design> {
    assert!(m >= 1 && lambda >= 1);
    let d = match u {
        3 => {
            let base = latin_square(m).to_design();
            replicate(base, lambda)
        }
        4 => {
            if m % 2 == 0 {
                let base = smallgdd::small_gdd('a')?;
                replicate(weight_inflate(&base, m / 2), lambda)
            } else if lambda % 2 == 0 {
                replicate(weight_inflate(&all_k4_triples(), m), lambda / 2)
            } else {
                return Err(IngredientError::Nonexistent(format!(
                    "no 3-GDD of type {m}^4 with odd index"
                )));
            }
        }
        5 => {
            if m % 3 == 0 {
                let base = catalog::global()?.design("gdd3_3_5")?;
                replicate(weight_inflate(&base, m / 3), lambda)
            } else if lambda % 3 == 0 {
                replicate(weight_inflate(&all_k5_triples(), m), lambda / 3)
            } else {
                return Err(IngredientError::Nonexistent(format!(
                    "no 3-GDD of type {m}^5 with index {lambda}"
                )));
            }
        }
        6 => {
            if m % 2 == 0 {
                let base = smallgdd::small_gdd('e')?;
                replicate(weight_inflate(&base, m / 2), lambda)
            } else if lambda % 2 == 0 {
                let base = catalog::global()?.design("ts_6_2")?;
                replicate(weight_inflate(&base, m), lambda / 2)
            } else {
                return Err(IngredientError::Nonexistent(format!(
                    "no 3-GDD of type {m}^6 with odd index"
                )));
            }
        }
        8 => {
            if m % 6 == 0 {
                // 4-line master of type 3^8, each 4-block filled by a
                // 3-GDD of type 2^4, gives type 6^8 at index 1
                let master = smallgdd::small_gdd('g')?;
                let mut pieces = BTreeMap::new();
                pieces.insert(4, smallgdd::small_gdd('a')?);
                let base = inflate_by_gdd(&master, 2, &pieces, 1);
                replicate(weight_inflate(&base, m / 6), lambda)
            } else if m % 2 == 0 && lambda % 3 == 0 {
                // {3,5}-line master of type 2^8; 5-blocks carry all ten
                // triples (index 3), 3-blocks are tripled
                let master = smallgdd::small_gdd('f')?;
                let mut blocks = BlockMultiset::new();
                for (block, &mult) in master.blocks.iter() {
                    match block.points().len() {
                        3 => blocks.add(block.clone(), mult * 3),
                        5 => {
                            let pts = block.points().to_vec();
                            for a in 0..5 {
                                for b in a + 1..5 {
                                    for c in b + 1..5 {
                                        blocks.add(
                                            Block::triple(pts[a], pts[b], pts[c]),
                                            mult,
                                        );
                                    }
                                }
                            }
                        }
                        s => panic!("unexpected block size {s}"),
                    }
                }
                let base = Design::new(master.grouping.clone(), blocks, gdd_kind(3));
                replicate(weight_inflate(&base, m / 2), lambda / 3)
            } else {
                return Err(IngredientError::Nonexistent(format!(
                    "no 3-GDD of type {m}^8 with index {lambda}"
                )));
            }
        }
        _ => {
            return Err(IngredientError::OutsideRange(format!(
                "triple GDDs on {u} groups are not built here"
            )))
        }
    };
    debug_assert!(verify_gdd(&d).pass, "3-GDD {m}^{u} lambda {lambda} failed");
    Ok(d)
}

/// Incomplete triple GDD of type (m;1)^5: index-1 triples on five groups of
/// size m whose pairs avoid a one-point-per-group hole. Requires m not
/// divisible by 3; m = 1 is the empty design.
pub fn igdd3_5(m: usize) -> Result<Design> {
    if m % 3 == 0 {
        return Err(IngredientError::Nonexistent(format!(
            "incomplete triple GDD (m;1)^5 needs 3 to not divide m, got {m}"
        )));
    }
    if m == 1 {
        let grouping = GroupedPointSet::uniform(1, 5);
        let hole = HoleSpec::new(grouping.points().collect());
        return Ok(Design::new(
            grouping,
            BlockMultiset::new(),
            DesignKind::Igdd { lambda: 1, hole },
        ));
    }
    match m {
        4 | 5 => catalog::global()?.design(&format!("igdd1_{m}_5")),
        _ if m <= 11 => smallgdd::gen_igdd1_5(m),
        _ => Err(IngredientError::OutsideRange(format!(
            "incomplete triple GDD ({m};1)^5 exceeds the search bound"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u3_and_inflation() {
        let d = lambda_gdd3(4, 3, 2).unwrap();
        assert!(verify_gdd(&d).pass);
        assert_eq!(d.blocks.total_multiplicity(), 32);
    }

    #[test]
    fn odd_index_parity_refusals() {
        assert!(matches!(
            lambda_gdd3(3, 4, 1),
            Err(IngredientError::Nonexistent(_))
        ));
        assert!(matches!(
            lambda_gdd3(2, 5, 2),
            Err(IngredientError::Nonexistent(_))
        ));
        assert!(matches!(
            lambda_gdd3(3, 8, 3),
            Err(IngredientError::Nonexistent(_))
        ));
    }

    #[test]
    fn even_bases_scale() {
        for (m, u, l) in [(1, 4, 2), (2, 4, 1), (1, 5, 3), (3, 5, 1), (1, 6, 2)] {
            let d = lambda_gdd3(m, u, l).unwrap();
            assert!(verify_gdd(&d).pass, "{m}^{u} lambda {l}");
        }
    }
}
