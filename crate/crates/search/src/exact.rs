//! Small exact linear algebra over the rationals (i128 fractions).
//! Sized for the incidence systems that show up here: at most a few hundred
//! rows and columns, entries 0/1, so i128 never overflows in practice.

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rat {
    num: i128,
    den: i128, // always positive
}

impl Rat {
    pub fn int(n: i128) -> Self {
        Rat { num: n, den: 1 }
    }

    fn new(num: i128, den: i128) -> Self {
        assert!(den != 0);
        if num == 0 {
            return Rat { num: 0, den: 1 };
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den);
        Rat {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn as_integer(&self) -> Option<i128> {
        if self.den == 1 {
            Some(self.num)
        } else {
            None
        }
    }


    fn sub(self, o: Rat) -> Rat {
        Rat::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }

    fn mul(self, o: Rat) -> Rat {
        Rat::new(self.num * o.num, self.den * o.den)
    }

    fn div(self, o: Rat) -> Rat {
        Rat::new(self.num * o.den, self.den * o.num)
    }
}

/// Row-reduce [a | b] and return one rational solution of a x = b, or None
/// when inconsistent.
pub fn solve(a: &[Vec<i128>], b: &[i128]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            row.iter()
                .map(|&x| Rat::int(x))
                .chain(std::iter::once(Rat::int(rhs)))
                .collect()
        })
        .collect();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let p = m[r][c];
        for x in m[r].iter_mut() {
            *x = x.div(p);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in c..=cols {
                    let sub = m[r][j].mul(f);
                    m[i][j] = m[i][j].sub(sub);
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // inconsistent if a zero row has nonzero rhs
    for i in r..rows {
        if !m[i][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::int(0); cols];
    for (row, &c) in pivot_col_of_row.iter().enumerate() {
        x[c] = m[row][cols];
    }
    Some(x)
}

/// Integer basis of the nullspace of a (each vector scaled to integers with
/// content 1).
pub fn nullspace(a: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .map(|row| row.iter().map(|&x| Rat::int(x)).collect())
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let p = m[r][c];
        for x in m[r].iter_mut() {
            *x = x.div(p);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = m[r][j].mul(f);
                    m[i][j] = m[i][j].sub(sub);
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rat::int(0); cols];
        v[free] = Rat::int(1);
        for c in 0..cols {
            if let Some(row) = pivot_of_col[c] {
                v[c] = Rat::int(0).sub(m[row][free]);
            }
        }
        // scale to integers
        let mut lcm: i128 = 1;
        for x in &v {
            lcm = lcm / gcd(lcm, x.den) * x.den;
        }
        let mut iv: Vec<i128> = v.iter().map(|x| x.num * (lcm / x.den)).collect();
        let mut content = 0;
        for &x in &iv {
            content = gcd(content, x);
        }
        if content > 1 {
            for x in iv.iter_mut() {
                *x /= content;
            }
        }
        basis.push(iv);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_system() {
        // x + y = 3, x - y = 1
        let a = vec![vec![1, 1], vec![1, -1]];
        let x = solve(&a, &[3, 1]).unwrap();
        assert_eq!(x[0].as_integer(), Some(2));
        assert_eq!(x[1].as_integer(), Some(1));
    }

    #[test]
    fn detects_inconsistency() {
        let a = vec![vec![1, 1], vec![2, 2]];
        assert!(solve(&a, &[1, 3]).is_none());
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = vec![vec![1, 2, 3]];
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(v[0] + 2 * v[1] + 3 * v[2], 0);
        }
    }
}
