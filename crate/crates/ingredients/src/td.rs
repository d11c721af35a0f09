//! Transversal designs TD(k,n): prime-power fields, MacNeish products, and
//! a small stored-MOLS catalog for exceptional orders like n = 10.

use sb_core::{verify_td, Block, BlockMultiset, Design, DesignKind, GroupedPointSet, PointId};

use crate::catalog;
use crate::error::{IngredientError, Result};
use crate::gf::prime_power;
use crate::latin::{latin_square, mols_prime_power};

/// Orders proven impossible (k,n); everything else we either build or
/// decline as out of range.
const NONEXISTENT: [(usize, usize); 5] = [(4, 2), (4, 6), (5, 2), (5, 6), (5, 10)];

pub fn td(k: usize, n: usize) -> Result<Design> {
    assert!(k >= 3, "transversal designs need at least 3 groups");
    if NONEXISTENT.contains(&(k, n)) {
        return Err(IngredientError::Nonexistent(format!(
            "no TD({k},{n}) exists"
        )));
    }
    if n == 1 {
        if k > 8 {
            return Err(IngredientError::OutsideRange(format!(
                "TD({k},1) block exceeds representable size"
            )));
        }
        let grouping = GroupedPointSet::uniform(1, k);
        let mut blocks = BlockMultiset::new();
        blocks.add(Block::new((0..k).map(|g| PointId::new(g, 0)).collect()), 1);
        return Ok(Design::new(grouping, blocks, DesignKind::Td { k }));
    }
    if k == 3 {
        let sq = latin_square(n);
        let mut d = sq.to_design();
        d.kind = DesignKind::Td { k: 3 };
        return Ok(d);
    }
    if prime_power(n).is_some() && k <= n + 1 {
        let squares = mols_prime_power(n, k)?;
        let d = td_from_mols(n, &squares);
        debug_assert!(verify_td(&d).pass);
        return Ok(d);
    }
    // MacNeish: TD(k, n1*n2) from TD(k,n1) x TD(k,n2), recursing over the
    // prime-power factorization when every factor is large enough
    if let Some(d) = macneish(k, n) {
        return Ok(d);
    }
    // stored MOLS catalog covers small orders outside the field/product
    // reach, currently the classical pair of orthogonal squares of order 10
    if k == 4 && n % 10 == 0 {
        let base = catalog::global()?.design("td_4_10")?;
        if n == 10 {
            return Ok(base);
        }
        if let Ok(other) = td(4, n / 10) {
            return Ok(product(4, &base, &other));
        }
    }
    Err(IngredientError::OutsideRange(format!(
        "TD({k},{n}) not reachable by field, product, or stored MOLS"
    )))
}

fn td_from_mols(n: usize, squares: &[sb_core::LatinSquare]) -> Design {
    let k = squares.len() + 2;
    let grouping = GroupedPointSet::uniform(n, k);
    let mut blocks = BlockMultiset::new();
    for x in 0..n {
        for y in 0..n {
            let mut pts = vec![PointId::new(0, x), PointId::new(1, y)];
            for (i, sq) in squares.iter().enumerate() {
                pts.push(PointId::new(2 + i, sq.get(x, y)));
            }
            blocks.add(Block::new(pts), 1);
        }
    }
    Design::new(grouping, blocks, DesignKind::Td { k })
}

fn macneish(k: usize, n: usize) -> Option<Design> {
    let factors = prime_power_factors(n);
    if factors.len() < 2 || factors.iter().any(|&f| f < k - 1) {
        return None;
    }
    let mut acc = td(k, factors[0]).ok()?;
    for &f in &factors[1..] {
        let next = td(k, f).ok()?;
        acc = product(k, &acc, &next);
    }
    debug_assert!(verify_td(&acc).pass);
    Some(acc)
}

fn prime_power_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1;
            while n % p == 0 {
                q *= p;
                n /= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Coordinatewise product: point (g, a) x (g, b) becomes (g, a*n2 + b) and
/// each block pair combines groupwise.
pub fn product(k: usize, d1: &Design, d2: &Design) -> Design {
    let n1 = d1.grouping.group_sizes()[0];
    let n2 = d2.grouping.group_sizes()[0];
    debug_assert_eq!(d1.grouping.num_groups(), k);
    debug_assert_eq!(d2.grouping.num_groups(), k);
    let _ = n1;
    let grouping = GroupedPointSet::uniform(n1 * n2, k);
    let mut blocks = BlockMultiset::new();
    for (b1, &m1) in d1.blocks.iter() {
        for (b2, &m2) in d2.blocks.iter() {
            let mut slot1 = vec![0usize; k];
            for &p in b1.points() {
                slot1[p.group as usize] = p.slot as usize;
            }
            let pts: Vec<PointId> = b2
                .points()
                .iter()
                .map(|&p| {
                    let g = p.group as usize;
                    PointId::new(g, slot1[g] * n2 + p.slot as usize)
                })
                .collect();
            blocks.add(Block::new(pts), m1 * m2);
        }
    }
    Design::new(grouping, blocks, DesignKind::Td { k })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_and_product_tds_verify() {
        for (k, n) in [(3, 1), (3, 7), (4, 3), (4, 5), (5, 7), (6, 5), (8, 9)] {
            let d = td(k, n).unwrap();
            assert!(verify_td(&d).pass, "TD({k},{n}) failed");
        }
        // MacNeish 4*3
        let d = td(4, 12).unwrap();
        assert!(verify_td(&d).pass);
        assert_eq!(d.blocks.total_multiplicity(), 144);
    }

    #[test]
    fn known_impossible_orders() {
        assert!(matches!(td(4, 6), Err(IngredientError::Nonexistent(_))));
        assert!(matches!(td(5, 6), Err(IngredientError::Nonexistent(_))));
    }

    #[test]
    fn unreachable_orders_are_flagged() {
        assert!(matches!(td(7, 6), Err(IngredientError::OutsideRange(_))));
    }
}
