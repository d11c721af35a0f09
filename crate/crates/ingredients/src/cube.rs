//! Sarvate-Beam cubes (SBGDD_0 of type n^3) and the triangle cover of
//! K6 x K3 used for type 3^6.

use sb_core::{verify, Design, DesignKind, GroupedPointSet};
use sb_search::{search_design, SearchOutcome, SearchSpec};

use crate::catalog;
use crate::error::{IngredientError, Result};

/// Pinned cube seeds; beyond the pinned range we search live.
pub const CUBE_RANGE: std::ops::RangeInclusive<usize> = 2..=6;

pub fn sb_cube(n: usize) -> Result<Design> {
    if n <= 1 {
        // three equal line sums through the single cell cannot be distinct
        return Err(IngredientError::Nonexistent(
            "no Sarvate-Beam cube of order 1".into(),
        ));
    }
    if CUBE_RANGE.contains(&n) {
        return catalog::global()?.design(&format!("sb_cube_{n}"));
    }
    if n <= 10 {
        if let Ok(d) = gen_sb_cube(n) {
            return Ok(d);
        }
    }
    Err(IngredientError::OutsideRange(format!(
        "Sarvate-Beam cube of order {n}"
    )))
}

pub fn gen_sb_cube(n: usize) -> Result<Design> {
    let spec = SearchSpec::interval(GroupedPointSet::uniform(n, 3), 0, 9000 + n as u64);
    match search_design(&spec) {
        SearchOutcome::Found(mut d) => {
            d.kind = DesignKind::SbCube;
            debug_assert!(verify(&d).pass);
            Ok(d)
        }
        SearchOutcome::Infeasible => {
            Err(IngredientError::Nonexistent(format!("no cube of order {n}")))
        }
        SearchOutcome::BudgetExhausted => Err(IngredientError::OutsideRange(format!(
            "cube search budget exhausted at order {n}"
        ))),
    }
}

/// Triangle multiset on the 18 points of type 3^6 covering exactly the 90
/// pairs that differ in both group and slot, with frequencies 0..89.
/// The remaining 45 same-slot pairs are left for three SBTS(6) layers.
pub fn k6xk3_cover() -> Result<Design> {
    catalog::global()?.design("k6xk3_cover")
}

pub fn gen_k6xk3_cover() -> Result<Design> {
    use sb_core::{Block, BlockMultiset, PointId};
    use sb_search::{solver, Budget};
    let inst = solver::CubeInstance {
        n: 6,
        exclude_diagonal: true,
        mu: 0,
    };
    let sol = solver::solve_cube(&inst, 424242, Budget::default()).ok_or_else(|| {
        IngredientError::OutsideRange("K6 x K3 cover search budget exhausted".into())
    })?;
    let mut blocks = BlockMultiset::new();
    for a in 0..6 {
        for b in 0..6 {
            for c in 0..6 {
                if sol.x[a][b][c] > 0 {
                    blocks.add(
                        Block::new(vec![
                            PointId::new(a, 0),
                            PointId::new(b, 1),
                            PointId::new(c, 2),
                        ]),
                        sol.x[a][b][c] as u64,
                    );
                }
            }
        }
    }
    Ok(Design::new(
        GroupedPointSet::uniform(3, 6),
        blocks,
        DesignKind::Sbgdd { mu: 0 },
    ))
}

/// The cover is not an SBGDD by itself; its defining property is checked
/// directly: same-slot pair frequencies all zero, the other 90 exactly
/// {0..89}.
pub fn check_k6xk3(d: &Design) -> std::result::Result<(), String> {
    if d.grouping != GroupedPointSet::uniform(3, 6) {
        return Err("wrong grouping".into());
    }
    let freqs = sb_core::pair_frequencies(&d.blocks, &d.grouping)
        .map_err(|e| format!("structural: {e}"))?;
    let mut mixed: Vec<u64> = Vec::new();
    for (&(a, b), &f) in freqs.iter() {
        if a.slot == b.slot {
            if f != 0 {
                return Err(format!("same-slot pair covered {f} times"));
            }
        } else {
            mixed.push(f);
        }
    }
    mixed.sort_unstable();
    if mixed != (0..90).collect::<Vec<u64>>() {
        return Err("mixed-slot frequencies are not 0..89".into());
    }
    Ok(())
}
