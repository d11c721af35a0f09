//! Small fixed GDD ingredients: exact-cover searches for the mixed-size
//! group divisible designs the recursion needs, difference-family
//! constructions for the two largest ones, and affine-plane derivations.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sb_core::{
    verify, Block, BlockMultiset, Design, DesignKind, GroupedPointSet, HoleSpec, PointId,
};
use sb_search::{Dlx, DlxResult};

use crate::catalog;
use crate::error::{IngredientError, Result};
use crate::gf::Gf;

/// The eight pinned small GDDs, by tag:
/// a: 3-GDD 2^4, b: {3,5}-GDD 2^5, c: 4-GDD 3^5, d: {3,4}-GDD 3^6,
/// e: 3-GDD 2^6, f: {3,5}-GDD 2^8, g: 4-GDD 3^8, h: {4,5}-GDD 5^8.
pub fn small_gdd(tag: char) -> Result<Design> {
    let id = match tag {
        'a' => "gdd3_2_4",
        'b' => "gdd35_2_5",
        'c' => "gdd4_3_5",
        'd' => "gdd34_3_6",
        'e' => "gdd3_2_6",
        'f' => "gdd35_2_8",
        'g' => "gdd4_3_8",
        'h' => "gdd45_5_8",
        _ => {
            return Err(IngredientError::OutsideRange(format!(
                "unknown small GDD tag `{tag}`"
            )))
        }
    };
    catalog::global()?.design(id)
}

/// Candidate blocks: one point from each of `s` distinct groups, for every
/// allowed size s, skipping any block that contains a hole pair.
fn candidate_blocks(
    grouping: &GroupedPointSet,
    sizes: &[usize],
    hole: Option<&HoleSpec>,
) -> Vec<Vec<PointId>> {
    let u = grouping.num_groups();
    let mut out = Vec::new();
    for &s in sizes {
        if s > u {
            continue;
        }
        let mut group_choice = Vec::with_capacity(s);
        pick_groups(grouping, hole, s, 0, &mut group_choice, &mut out);
    }
    out
}

fn pick_groups(
    grouping: &GroupedPointSet,
    hole: Option<&HoleSpec>,
    s: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<PointId>>,
) {
    if chosen.len() == s {
        let mut pts = Vec::with_capacity(s);
        fill_points(grouping, hole, chosen, 0, &mut pts, out);
        return;
    }
    let u = grouping.num_groups();
    for g in from..u {
        if u - g < s - chosen.len() {
            break;
        }
        chosen.push(g);
        pick_groups(grouping, hole, s, g + 1, chosen, out);
        chosen.pop();
    }
}

fn fill_points(
    grouping: &GroupedPointSet,
    hole: Option<&HoleSpec>,
    groups: &[usize],
    idx: usize,
    pts: &mut Vec<PointId>,
    out: &mut Vec<Vec<PointId>>,
) {
    if idx == groups.len() {
        out.push(pts.clone());
        return;
    }
    let g = groups[idx];
    for slot in 0..grouping.group_sizes()[g] {
        let p = PointId::new(g, slot);
        // two hole points in one block would cover a hole pair
        if let Some(h) = hole {
            if h.contains(p) && pts.iter().any(|&q| h.contains(q)) {
                continue;
            }
        }
        pts.push(p);
        fill_points(grouping, hole, groups, idx + 1, pts, out);
        pts.pop();
    }
}

/// Exact cover of the (non-hole) cross pairs by candidate blocks: a
/// lambda = 1 GDD search. Row order is reshuffled per attempt so stalled
/// branch orders get abandoned.
pub fn exact_cover_gdd(
    grouping: &GroupedPointSet,
    sizes: &[usize],
    hole: Option<&HoleSpec>,
    seed: u64,
    attempts: u32,
    node_budget: u64,
) -> Option<BlockMultiset> {
    let pairs: Vec<(PointId, PointId)> = grouping
        .cross_pairs()
        .into_iter()
        .filter(|&(a, b)| !hole.map(|h| h.is_hole_pair(a, b)).unwrap_or(false))
        .collect();
    let col_of: std::collections::HashMap<(PointId, PointId), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut cands = candidate_blocks(grouping, sizes, hole);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        cands.shuffle(&mut rng);
        let rows: Vec<Vec<usize>> = cands
            .iter()
            .map(|pts| {
                let mut cols = Vec::new();
                for i in 0..pts.len() {
                    for j in i + 1..pts.len() {
                        let key = if pts[i] < pts[j] {
                            (pts[i], pts[j])
                        } else {
                            (pts[j], pts[i])
                        };
                        cols.push(col_of[&key]);
                    }
                }
                cols
            })
            .collect();
        match Dlx::new(pairs.len(), &rows).solve(node_budget) {
            DlxResult::Solution(chosen) => {
                let mut blocks = BlockMultiset::new();
                for r in chosen {
                    blocks.add(Block::new(cands[r].clone()), 1);
                }
                return Some(blocks);
            }
            DlxResult::Infeasible => return None,
            DlxResult::BudgetExhausted => continue,
        }
    }
    None
}

fn gdd_design(grouping: GroupedPointSet, blocks: BlockMultiset, sizes: Vec<usize>) -> Design {
    Design::new(grouping, blocks, DesignKind::Gdd { lambda: 1, sizes })
}

/// 3-GDD of type 2^4 (tag a).
pub fn gen_gdd3_2_4() -> Result<Design> {
    let grouping = GroupedPointSet::uniform(2, 4);
    let blocks = exact_cover_gdd(&grouping, &[3], None, 11, 20, 5_000_000)
        .ok_or_else(|| IngredientError::OutsideRange("3-GDD 2^4 search failed".into()))?;
    Ok(gdd_design(grouping, blocks, vec![3]))
}

/// {3,5}-GDD of type 2^5 (tag b): the incomplete triple part plus one
/// size-5 block on the hole transversal, so deleting that block leaves a
/// 3-IGDD of type (2;1)^5.
pub fn gen_gdd35_2_5() -> Result<Design> {
    let igdd = gen_igdd1_5(2)?;
    let grouping = GroupedPointSet::uniform(2, 5);
    let mut blocks = igdd.blocks.clone();
    blocks.add(Block::new((0..5).map(|g| PointId::new(g, 0)).collect()), 1);
    Ok(gdd_design(grouping, blocks, vec![3, 5]))
}

/// 4-GDD of type 3^5 (tag c): delete a point of the affine plane of order
/// 4; lines through it become the groups.
pub fn gen_gdd4_3_5() -> Result<Design> {
    affine_deletion(4)
}

/// {3,4}-GDD of type 3^6 (tag d).
pub fn gen_gdd34_3_6() -> Result<Design> {
    let grouping = GroupedPointSet::uniform(3, 6);
    let blocks = exact_cover_gdd(&grouping, &[3, 4], None, 17, 40, 20_000_000)
        .ok_or_else(|| IngredientError::OutsideRange("{3,4}-GDD 3^6 search failed".into()))?;
    Ok(gdd_design(grouping, blocks, vec![3, 4]))
}

/// 3-GDD of type 2^6 (tag e).
pub fn gen_gdd3_2_6() -> Result<Design> {
    let grouping = GroupedPointSet::uniform(2, 6);
    let blocks = exact_cover_gdd(&grouping, &[3], None, 23, 40, 20_000_000)
        .ok_or_else(|| IngredientError::OutsideRange("3-GDD 2^6 search failed".into()))?;
    Ok(gdd_design(grouping, blocks, vec![3]))
}

/// {3,5}-GDD of type 2^8 (tag f).
pub fn gen_gdd35_2_8() -> Result<Design> {
    let grouping = GroupedPointSet::uniform(2, 8);
    let blocks = exact_cover_gdd(&grouping, &[3, 5], None, 31, 60, 50_000_000)
        .ok_or_else(|| IngredientError::OutsideRange("{3,5}-GDD 2^8 search failed".into()))?;
    Ok(gdd_design(grouping, blocks, vec![3, 5]))
}

/// 4-GDD of type 3^8 (tag g): delete a point from a (25,4,1) design built
/// from a two-base difference family over (Z5)^2 (no cyclic one exists over
/// Z25, element 5x+y standing for the vector (x,y)).
pub fn gen_gdd4_3_8() -> Result<Design> {
    let add = |a: usize, b: usize| (a / 5 + b / 5) % 5 * 5 + (a + b) % 5;
    let neg = |a: usize| (5 - a / 5) % 5 * 5 + (5 - a % 5) % 5;
    let bases = difference_family_group(25, 4, &add, &neg, &|_| true)
        .ok_or_else(|| IngredientError::OutsideRange("(25,4,1) difference family".into()))?;
    let mut design_blocks = Vec::new();
    for base in &bases {
        for t in 0..25 {
            design_blocks.push(base.iter().map(|&x| add(x, t)).collect::<Vec<_>>());
        }
    }
    Ok(point_deletion(&design_blocks, 25, 0, vec![4]))
}

/// {4,5}-GDD of type 5^8 (tag h): a 5-GDD of type 5^9 with one group
/// deleted. The 5^9 design develops a two-base difference family over
/// Z3 x Z3 x Z5 (element ((a,b),c) encoded as (3a+b)*5+c); groups are the
/// cosets of the order-5 subgroup, so no cyclic search over Z45 is needed.
pub fn gen_gdd45_5_8() -> Result<Design> {
    let add = |x: usize, y: usize| {
        let (ax, bx, cx) = (x / 15, (x / 5) % 3, x % 5);
        let (ay, by, cy) = (y / 15, (y / 5) % 3, y % 5);
        ((ax + ay) % 3) * 15 + ((bx + by) % 3) * 5 + (cx + cy) % 5
    };
    let neg = |x: usize| {
        let (a, b, c) = (x / 15, (x / 5) % 3, x % 5);
        ((3 - a) % 3) * 15 + ((3 - b) % 3) * 5 + (5 - c) % 5
    };
    let bases = difference_family_group(45, 5, &add, &neg, &|d| d >= 5)
        .ok_or_else(|| IngredientError::OutsideRange("5-GDD 5^9 difference family".into()))?;
    // delete the coset of 0 (points < 5); blocks through it drop to size 4
    let grouping = GroupedPointSet::uniform(5, 8);
    let mut bm = BlockMultiset::new();
    for base in &bases {
        for t in 0..45 {
            let pts: Vec<PointId> = base
                .iter()
                .map(|&x| add(x, t))
                .filter(|&x| x >= 5)
                .map(|x| PointId::new(x / 5 - 1, x % 5))
                .collect();
            bm.add(Block::new(pts), 1);
        }
    }
    Ok(Design::new(
        grouping,
        bm,
        DesignKind::Gdd {
            lambda: 1,
            sizes: vec![4, 5],
        },
    ))
}

/// 3-IGDD of type (m;1)^5, lambda = 1, hole at slot 0 of each group.
pub fn gen_igdd1_5(m: usize) -> Result<Design> {
    assert!(m % 3 != 0);
    let grouping = GroupedPointSet::uniform(m, 5);
    let hole = HoleSpec::first_slots(5);
    if m == 1 {
        return Ok(Design::new(
            grouping,
            BlockMultiset::new(),
            DesignKind::Igdd { lambda: 1, hole },
        ));
    }
    let blocks = exact_cover_gdd(&grouping, &[3], Some(&hole), 41, 60, 50_000_000)
        .ok_or_else(|| {
            IngredientError::OutsideRange(format!("3-IGDD ({m};1)^5 search failed"))
        })?;
    Ok(Design::new(
        grouping,
        blocks,
        DesignKind::Igdd { lambda: 1, hole },
    ))
}

/// 3-GDD of type 3^5 (the resolvable-triple-system relative), found by
/// exact cover; base ingredient for (3,lambda)-GDDs with five groups.
pub fn gen_gdd3_3_5() -> Result<Design> {
    let grouping = GroupedPointSet::uniform(3, 5);
    let blocks = exact_cover_gdd(&grouping, &[3], None, 47, 40, 20_000_000)
        .ok_or_else(|| IngredientError::OutsideRange("3-GDD 3^5 search failed".into()))?;
    Ok(gdd_design(grouping, blocks, vec![3]))
}

/// PBD(u, {3,4,5}) base found by exact cover on singleton groups.
pub fn gen_pbd_base(u: usize, sizes: &[usize], seed: u64) -> Result<Design> {
    let grouping = GroupedPointSet::uniform(1, u);
    let blocks = exact_cover_gdd(&grouping, sizes, None, seed, 60, 50_000_000)
        .ok_or_else(|| IngredientError::OutsideRange(format!("PBD({u}) search failed")))?;
    Ok(Design::new(
        grouping,
        blocks,
        DesignKind::Pbd {
            sizes: sizes.to_vec(),
        },
    ))
}

/// Delete one point of the affine plane AG(2,q); the q+1 lines through it
/// become groups of size q-1, the rest stay as blocks of size q.
fn affine_deletion(q: usize) -> Result<Design> {
    let f = Gf::new(q).ok_or_else(|| {
        IngredientError::OutsideRange(format!("{q} is not a prime power"))
    })?;
    // lines through the origin, one per slope plus the vertical
    // direction m: points (x, m*x), x != 0; vertical: (0, y), y != 0
    let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
    for m in 0..q {
        groups.push((1..q).map(|x| (x, f.mul(m, x))).collect());
    }
    groups.push((1..q).map(|y| (0, y)).collect());
    let mut index: std::collections::HashMap<(usize, usize), PointId> =
        std::collections::HashMap::new();
    for (g, pts) in groups.iter().enumerate() {
        for (s, &xy) in pts.iter().enumerate() {
            index.insert(xy, PointId::new(g, s));
        }
    }
    let grouping = GroupedPointSet::uniform(q - 1, q + 1);
    let mut blocks = BlockMultiset::new();
    // non-vertical lines y = m*x + b with b != 0, and verticals x = a != 0
    for m in 0..q {
        for b in 1..q {
            let pts: Vec<PointId> = (0..q)
                .map(|x| index[&(x, f.add(f.mul(m, x), b))])
                .collect();
            blocks.add(Block::new(pts), 1);
        }
    }
    for a in 1..q {
        let pts: Vec<PointId> = (0..q).map(|y| index[&(a, y)]).collect();
        blocks.add(Block::new(pts), 1);
    }
    let d = gdd_design(grouping, blocks, vec![q]);
    debug_assert!(verify(&d).pass);
    Ok(d)
}

/// Two-base difference family over an abelian group on {0..v-1} given by
/// its addition and negation tables: the pairwise differences of the bases
/// hit every allowed difference class {d,-d} exactly once.
fn difference_family_group(
    v: usize,
    k: usize,
    add: &dyn Fn(usize, usize) -> usize,
    neg: &dyn Fn(usize) -> usize,
    allowed: &dyn Fn(usize) -> bool,
) -> Option<Vec<Vec<usize>>> {
    let rep = |d: usize| d.min(neg(d));
    let classes: Vec<usize> = (1..v).filter(|&d| rep(d) == d && allowed(d)).collect();
    let class_idx: std::collections::HashMap<usize, usize> =
        classes.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let full: u64 = (1u64 << classes.len()) - 1;
    let mask_of = |base: &[usize]| -> Option<u64> {
        let mut m = 0u64;
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let d = rep(add(base[j], neg(base[i])));
                let &c = class_idx.get(&d)?;
                if m & (1 << c) != 0 {
                    return None;
                }
                m |= 1 << c;
            }
        }
        Some(m)
    };
    // enumerate bases containing 0 and keep one representative per mask;
    // a valid family is a pair of complementary masks
    let mut seen: std::collections::HashMap<u64, Vec<usize>> = std::collections::HashMap::new();
    let mut base = vec![0usize];
    let mut found: Option<(Vec<usize>, Vec<usize>)> = None;
    fn extend(
        v: usize,
        k: usize,
        from: usize,
        base: &mut Vec<usize>,
        mask_of: &dyn Fn(&[usize]) -> Option<u64>,
        seen: &mut std::collections::HashMap<u64, Vec<usize>>,
        full: u64,
        found: &mut Option<(Vec<usize>, Vec<usize>)>,
    ) {
        if found.is_some() {
            return;
        }
        if base.len() == k {
            if let Some(m) = mask_of(base) {
                if let Some(other) = seen.get(&(full ^ m)) {
                    *found = Some((other.clone(), base.clone()));
                    return;
                }
                seen.entry(m).or_insert_with(|| base.clone());
            }
            return;
        }
        for x in from..v {
            base.push(x);
            if mask_of(base).is_some() {
                extend(v, k, x + 1, base, mask_of, seen, full, found);
            }
            base.pop();
            if found.is_some() {
                return;
            }
        }
    }
    extend(v, k, 1, &mut base, &mask_of, &mut seen, full, &mut found);
    found.map(|(a, b)| vec![a, b])
}


/// Delete one point of a pairwise design on Z_v: blocks through it become
/// the groups, the rest keep their size.
fn point_deletion(blocks: &[Vec<usize>], v: usize, deleted: usize, sizes: Vec<usize>) -> Design {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut rest: Vec<Vec<usize>> = Vec::new();
    for b in blocks {
        if b.contains(&deleted) {
            groups.push(b.iter().copied().filter(|&x| x != deleted).collect());
        } else {
            rest.push(b.clone());
        }
    }
    let mut index = std::collections::HashMap::new();
    for (g, grp) in groups.iter().enumerate() {
        for (s, &x) in grp.iter().enumerate() {
            index.insert(x, PointId::new(g, s));
        }
    }
    let grouping = GroupedPointSet::new(groups.iter().map(|g| g.len()).collect());
    let mut bm = BlockMultiset::new();
    let _ = v;
    for b in rest {
        bm.add(Block::new(b.iter().map(|&x| index[&x]).collect()), 1);
    }
    Design::new(grouping, bm, DesignKind::Gdd { lambda: 1, sizes })
}

