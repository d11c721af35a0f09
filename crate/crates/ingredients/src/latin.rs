//! Latin squares: cyclic, idempotent, and MOLS from finite fields.

use sb_core::verify::{verify_idempotent_latin, verify_latin, verify_mols};
use sb_core::LatinSquare;

use crate::error::{IngredientError, Result};
use crate::gf::{prime_power, Gf};

/// Cyclic square: cell (i,j) = i + j mod n.
pub fn latin_square(n: usize) -> LatinSquare {
    assert!(n >= 1);
    let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let sq = LatinSquare::from_rows(rows);
    debug_assert!(verify_latin(&sq).is_ok());
    sq
}

/// Idempotent latin square (cell (i,i) = i), any order except 2.
/// Odd orders have the closed form (i+j)/2; even orders are filled by
/// backtracking with the diagonal pinned, which is instant at the sizes the
/// assembler uses (n=6 most importantly).
pub fn idempotent_latin_square(n: usize) -> Result<LatinSquare> {
    if n == 2 {
        return Err(IngredientError::Nonexistent(
            "no idempotent latin square of order 2".into(),
        ));
    }
    if n == 1 {
        return Ok(LatinSquare::from_rows(vec![vec![0]]));
    }
    let sq = if n % 2 == 1 {
        let inv2 = (n + 1) / 2; // 2 * inv2 == 1 mod n
        LatinSquare::from_rows(
            (0..n)
                .map(|i| (0..n).map(|j| ((i + j) * inv2) % n).collect())
                .collect(),
        )
    } else {
        backtrack_idempotent(n).ok_or_else(|| {
            IngredientError::OutsideRange(format!("idempotent latin square of order {n}"))
        })?
    };
    debug_assert!(verify_latin(&sq).is_ok() && verify_idempotent_latin(&sq).is_ok());
    Ok(sq)
}

fn backtrack_idempotent(n: usize) -> Option<LatinSquare> {
    let mut grid = vec![vec![usize::MAX; n]; n];
    let mut row_used = vec![vec![false; n]; n];
    let mut col_used = vec![vec![false; n]; n];
    for i in 0..n {
        grid[i][i] = i;
        row_used[i][i] = true;
        col_used[i][i] = true;
    }
    fn fill(
        cell: usize,
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        row_used: &mut Vec<Vec<bool>>,
        col_used: &mut Vec<Vec<bool>>,
    ) -> bool {
        if cell == n * n {
            return true;
        }
        let (r, c) = (cell / n, cell % n);
        if r == c {
            return fill(cell + 1, n, grid, row_used, col_used);
        }
        for s in 0..n {
            // the diagonal already owns symbol r in row r and c in column c
            if s == r || s == c || row_used[r][s] || col_used[c][s] {
                continue;
            }
            grid[r][c] = s;
            row_used[r][s] = true;
            col_used[c][s] = true;
            if fill(cell + 1, n, grid, row_used, col_used) {
                return true;
            }
            grid[r][c] = usize::MAX;
            row_used[r][s] = false;
            col_used[c][s] = false;
        }
        false
    }
    if fill(0, n, &mut grid, &mut row_used, &mut col_used) {
        Some(LatinSquare::from_rows(grid))
    } else {
        None
    }
}

/// k-2 mutually orthogonal squares of prime-power order q via the field
/// construction L_a(x,y) = a*x + y over GF(q), one square per nonzero a.
pub fn mols_prime_power(q: usize, k: usize) -> Result<Vec<LatinSquare>> {
    if prime_power(q).is_none() {
        return Err(IngredientError::OutsideRange(format!(
            "{q} is not a prime power"
        )));
    }
    if k < 3 || k > q + 1 {
        return Err(IngredientError::OutsideRange(format!(
            "need 3 <= k <= q+1, got k={k}, q={q}"
        )));
    }
    let f = Gf::new(q).expect("prime power order");
    let squares: Vec<LatinSquare> = (1..k - 1)
        .map(|a| {
            LatinSquare::from_rows(
                (0..q)
                    .map(|x| (0..q).map(|y| f.add(f.mul(a, x), y)).collect())
                    .collect(),
            )
        })
        .collect();
    debug_assert!(verify_mols(&squares).is_ok());
    Ok(squares)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_squares_are_latin() {
        for n in 1..=8 {
            assert!(verify_latin(&latin_square(n)).is_ok());
        }
    }

    #[test]
    fn idempotent_orders() {
        assert!(idempotent_latin_square(2).is_err());
        for n in [1, 3, 4, 5, 6, 7, 8, 9, 10] {
            let sq = idempotent_latin_square(n).unwrap();
            assert!(verify_latin(&sq).is_ok());
            assert!(verify_idempotent_latin(&sq).is_ok());
        }
    }

    #[test]
    fn field_mols_orthogonal() {
        for (q, k) in [(3, 4), (4, 5), (5, 6), (7, 5), (8, 9), (9, 10)] {
            let ms = mols_prime_power(q, k).unwrap();
            assert_eq!(ms.len(), k - 2);
            assert!(verify_mols(&ms).is_ok());
        }
        assert!(mols_prime_power(6, 3).is_err());
        assert!(mols_prime_power(4, 6).is_err());
    }
}
