//! Orthogonal-mate search: build TD(4,10) from a pair of orthogonal latin
//! squares of order 10 found by decomposing a random square into disjoint
//! transversals.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sb_core::{verify_td, Block, BlockMultiset, Design, DesignKind, GroupedPointSet, LatinSquare, PointId};
use sb_search::{Dlx, DlxResult};

use crate::error::{IngredientError, Result};

pub fn gen_td_4_10() -> Result<Design> {
    let n = 10;
    let mut rng = ChaCha8Rng::seed_from_u64(271828);
    for _ in 0..200 {
        let Some(sq) = random_latin(n, &mut rng) else {
            continue;
        };
        let transversals = all_transversals(&sq);
        if transversals.len() < n {
            continue;
        }
        // exact cover: partition the 100 cells into 10 disjoint transversals
        let rows: Vec<Vec<usize>> = transversals
            .iter()
            .map(|t| t.iter().enumerate().map(|(r, &c)| r * n + c).collect())
            .collect();
        if let DlxResult::Solution(chosen) = Dlx::new(n * n, &rows).solve(30_000_000) {
            let mut mate = vec![vec![0usize; n]; n];
            for (sym, &ti) in chosen.iter().enumerate() {
                for (r, &c) in transversals[ti].iter().enumerate() {
                    mate[r][c] = sym;
                }
            }
            let mate = LatinSquare::from_rows(mate);
            let d = td_from_pair(&sq, &mate);
            if verify_td(&d).pass {
                return Ok(d);
            }
        }
    }
    Err(IngredientError::OutsideRange(
        "no orthogonal mate found for order 10 within budget".into(),
    ))
}

fn td_from_pair(s1: &LatinSquare, s2: &LatinSquare) -> Design {
    let n = s1.order();
    let grouping = GroupedPointSet::uniform(n, 4);
    let mut blocks = BlockMultiset::new();
    for x in 0..n {
        for y in 0..n {
            blocks.add(
                Block::new(vec![
                    PointId::new(0, x),
                    PointId::new(1, y),
                    PointId::new(2, s1.get(x, y)),
                    PointId::new(3, s2.get(x, y)),
                ]),
                1,
            );
        }
    }
    Design::new(grouping, blocks, DesignKind::Td { k: 4 })
}

/// Row-by-row randomized fill with column bookkeeping; gives up on a dead
/// row rather than backtracking globally, which is fine since callers retry.
fn random_latin(n: usize, rng: &mut ChaCha8Rng) -> Option<LatinSquare> {
    let mut grid: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut col_used = vec![vec![false; n]; n];
    for _ in 0..n {
        let mut row = vec![usize::MAX; n];
        let mut row_used = vec![false; n];
        // fill the row by backtracking over randomized symbol preferences
        let mut prefs: Vec<Vec<usize>> = (0..n)
            .map(|c| {
                let mut v: Vec<usize> = (0..n).filter(|&s| !col_used[c][s]).collect();
                v.shuffle(rng);
                v
            })
            .collect();
        // order columns by fewest choices first
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&c| prefs[c].len());
        if !fill_row(&order, 0, &mut prefs, &mut row, &mut row_used) {
            return None;
        }
        for c in 0..n {
            col_used[c][row[c]] = true;
        }
        grid.push(row);
    }
    Some(LatinSquare::from_rows(grid))
}

fn fill_row(
    order: &[usize],
    i: usize,
    prefs: &mut Vec<Vec<usize>>,
    row: &mut Vec<usize>,
    row_used: &mut Vec<bool>,
) -> bool {
    if i == order.len() {
        return true;
    }
    let c = order[i];
    let choices = prefs[c].clone();
    for s in choices {
        if row_used[s] {
            continue;
        }
        row[c] = s;
        row_used[s] = true;
        if fill_row(order, i + 1, prefs, row, row_used) {
            return true;
        }
        row[c] = usize::MAX;
        row_used[s] = false;
    }
    false
}

/// All transversals of a square: one cell per row, distinct columns and
/// symbols, by DFS over rows with bitmasks.
fn all_transversals(sq: &LatinSquare) -> Vec<Vec<usize>> {
    let n = sq.order();
    let mut out = Vec::new();
    let mut cols: Vec<usize> = Vec::with_capacity(n);
    fn dfs(
        sq: &LatinSquare,
        r: usize,
        col_mask: u32,
        sym_mask: u32,
        cols: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = sq.order();
        if r == n {
            out.push(cols.clone());
            return;
        }
        for c in 0..n {
            let s = sq.get(r, c);
            if col_mask & (1 << c) == 0 && sym_mask & (1 << s) == 0 {
                cols.push(c);
                dfs(sq, r + 1, col_mask | (1 << c), sym_mask | (1 << s), cols, out);
                cols.pop();
            }
        }
    }
    dfs(sq, 0, 0, 0, &mut cols, &mut out);
    out
}
