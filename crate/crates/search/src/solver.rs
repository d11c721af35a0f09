//! Interval solvers: place the target interval's values on the cross pairs
//! (an assignment), build an exact integer solution, then anneal negative
//! multiplicities away with kernel moves. Restarting with a fresh assignment
//! is part of the budget; every returned solution is exact by construction
//! and re-checked.

use crate::anneal;
use crate::particular;
use crate::system::TriangleSystem;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sb_core::HoleSpec;

/// Shared knobs; counts are attempts (assignment restarts) and annealing
/// iterations per attempt.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub attempts: u32,
    pub iters: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            attempts: 60,
            iters: 4_000_000,
        }
    }
}

/// Multiplicities per triangle of `sys` realizing the interval, or None if
/// the budget ran out.
pub fn solve_multipartite_interval(
    sys: &TriangleSystem,
    hole: Option<&HoleSpec>,
    mu: u64,
    seed: u64,
    budget: Budget,
) -> Option<Vec<i64>> {
    let ne = sys.num_edges();
    let total: i64 = (0..ne as i64).map(|i| mu as i64 + i).sum();
    if total % 3 != 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = find_base_clique(sys, hole)?;
    let mut order: Vec<usize> = (0..sys.points.len())
        .filter(|v| !base.contains(v))
        .collect();
    // peel hole points first so the link graphs stay rich
    order.sort_by_key(|&v| {
        let is_hole = hole.map(|h| h.contains(sys.points[v])).unwrap_or(false);
        (!is_hole, v)
    });
    let kernel_dim = sys.triangles.len().saturating_sub(ne);
    let moves = anneal::subset_kernel_moves(sys, &mut rng, (kernel_dim * 6).max(4000));

    // cheap restart-heavy pass first: small instances fail on a bad
    // assignment, not on annealing effort, so fresh assignments with short
    // anneals dominate long anneals there
    // large systems need longer anneals per attempt, scaling roughly with
    // the square of the edge count
    let main_iters = if ne > 36 {
        budget.iters.max(ne as u64 * ne as u64 * 400)
    } else {
        budget.iters
    };
    let cheap = if ne <= 36 {
        (budget.attempts.saturating_mul(60), budget.iters / 200)
    } else {
        (budget.attempts / 10, main_iters / 20)
    };
    let phases = [cheap, (budget.attempts, main_iters)];
    for (attempts, iters) in phases {
        for _ in 0..attempts {
            let Some(f) = random_even_star_assignment(sys, mu, &mut rng) else {
                continue;
            };
            let Some(mut x) = particular::peel(sys, &f, &order) else {
                continue;
            };
            let mut s = anneal::anneal(&mut x, &moves, None, &mut rng, iters, 2.0);
            // perturb-and-resweep rounds before giving up on the assignment
            for _ in 0..8 {
                if s == 0 {
                    break;
                }
                s = anneal::greedy_sweep(&mut x, &moves, None);
                if s == 0 {
                    break;
                }
                for _ in 0..6 {
                    let mv = &moves[rng.gen_range(0..moves.len())];
                    let sign: i64 = if rng.gen::<bool>() { 1 } else { -1 };
                    for &(t, c) in &mv.deltas {
                        x[t] += sign * c;
                    }
                }
                s = anneal::anneal(&mut x, &moves, None, &mut rng, iters / 6, 0.5);
            }
            if s == 0 && sys.produces(&x, &f) && x.iter().all(|&v| v >= 0) {
                return Some(x);
            }
        }
    }
    None
}

/// Five pairwise-adjacent vertices avoiding hole points (so all 10 triangles
/// of the base exist in the system).
fn find_base_clique(sys: &TriangleSystem, hole: Option<&HoleSpec>) -> Option<Vec<usize>> {
    let n = sys.points.len();
    let ok = |v: usize| !hole.map(|h| h.contains(sys.points[v])).unwrap_or(false);
    let mut clique: Vec<usize> = Vec::new();
    fn extend(
        sys: &TriangleSystem,
        n: usize,
        start: usize,
        clique: &mut Vec<usize>,
        ok: &dyn Fn(usize) -> bool,
    ) -> bool {
        if clique.len() == 5 {
            return true;
        }
        for v in start..n {
            if ok(v) && clique.iter().all(|&u| sys.adjacent(u, v)) {
                clique.push(v);
                if extend(sys, n, v + 1, clique, ok) {
                    return true;
                }
                clique.pop();
            }
        }
        false
    }
    if extend(sys, n, 0, &mut clique, &ok) {
        Some(clique)
    } else {
        None
    }
}

/// Random permutation of the interval onto the edges, repaired so every
/// vertex's incident sum is even (a parity every triangle multiset obeys).
pub fn random_even_star_assignment(
    sys: &TriangleSystem,
    mu: u64,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<i64>> {
    let ne = sys.num_edges();
    let n = sys.points.len();
    let mut vals: Vec<i64> = (0..ne as i64).map(|i| mu as i64 + i).collect();
    vals.shuffle(rng);
    let star = |f: &[i64], v: usize| -> i64 {
        sys.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(e, _)| f[e])
            .sum()
    };
    for _ in 0..200 {
        let odd: Vec<usize> = (0..n).filter(|&v| star(&vals, v) % 2 != 0).collect();
        if odd.is_empty() {
            return Some(vals);
        }
        if odd.len() < 2 {
            return None;
        }
        let mut fixed = false;
        'pairs: for i in 0..odd.len() {
            for j in i + 1..odd.len() {
                let (u, w) = (odd[i], odd[j]);
                for z in 0..n {
                    if z == u || z == w {
                        continue;
                    }
                    let (Some(e1), Some(e2)) = (sys.edge_of(u, z), sys.edge_of(w, z)) else {
                        continue;
                    };
                    if (vals[e1] - vals[e2]) % 2 != 0 {
                        vals.swap(e1, e2);
                        fixed = true;
                        break 'pairs;
                    }
                }
            }
        }
        if !fixed {
            return None;
        }
    }
    None
}

/// An n*n*n array of nonnegative integers whose 3n^2 line sums are exactly
/// the interval mu..mu+3n^2-1 (the cube case), or, with `exclude_diagonal`,
/// zero on every cell with two equal coordinates while the 3n(n-1)
/// off-diagonal line sums are exactly mu..mu+3n(n-1)-1 (the K_n x K3 case).
pub struct CubeInstance {
    pub n: usize,
    pub exclude_diagonal: bool,
    pub mu: u64,
}

pub struct CubeSolution {
    pub x: Vec<Vec<Vec<i64>>>,
    /// Line-sum matrices: a[i][j] = sum over k of x[i][j][k], etc.
    pub a: Vec<Vec<i64>>,
    pub b: Vec<Vec<i64>>,
    pub c: Vec<Vec<i64>>,
}

pub fn solve_cube(inst: &CubeInstance, seed: u64, budget: Budget) -> Option<CubeSolution> {
    let n = inst.n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget.attempts {
        let Some((a, b, c)) = balanced_marginals(inst, &mut rng) else {
            continue;
        };
        let mut x = particular::cube_corner(n, &a, &b, &c);
        if cube_anneal(inst, &mut x, &mut rng, budget.iters) == 0 {
            debug_assert!(cube_check(inst, &x, &a, &b, &c));
            return Some(CubeSolution { x, a, b, c });
        }
    }
    None
}

fn cube_check(
    inst: &CubeInstance,
    x: &[Vec<Vec<i64>>],
    a: &[Vec<i64>],
    b: &[Vec<i64>],
    c: &[Vec<i64>],
) -> bool {
    let n = inst.n;
    for i in 0..n {
        for j in 0..n {
            let sa: i64 = (0..n).map(|k| x[i][j][k]).sum();
            let sb: i64 = (0..n).map(|k| x[i][k][j]).sum();
            let sc: i64 = (0..n).map(|k| x[k][i][j]).sum();
            if sa != a[i][j] || sb != b[i][j] || sc != c[i][j] {
                return false;
            }
        }
    }
    x.iter().flatten().flatten().all(|&v| v >= 0)
}

fn forbidden_cell(inst: &CubeInstance, a: usize, b: usize, c: usize) -> bool {
    inst.exclude_diagonal && (a == b || b == c || a == c)
}

/// Line-sum matrices realizing the interval with all per-vertex direction
/// sums equal (a marginal-consistency requirement), found by annealed value
/// swaps. For the diagonal-excluded case the diagonals are pinned to zero
/// and per-vertex transportation bounds join the objective.
fn balanced_marginals(
    inst: &CubeInstance,
    rng: &mut ChaCha8Rng,
) -> Option<(Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let n = inst.n;
    let excl = inst.exclude_diagonal;
    let positions: Vec<(usize, usize, usize)> = (0..3)
        .flat_map(|m| (0..n).flat_map(move |i| (0..n).map(move |j| (m, i, j))))
        .filter(|&(_, i, j)| !(excl && i == j))
        .collect();
    let count = positions.len();
    let mut vals: Vec<i64> = (0..count as i64).map(|i| inst.mu as i64 + i).collect();

    for _round in 0..60 {
        vals.shuffle(rng);
        let mut m = vec![vec![vec![0i64; n]; n]; 3];
        for (p, &v) in positions.iter().zip(vals.iter()) {
            m[p.0][p.1][p.2] = v;
        }
        // cached row and column sums so the objective is cheap
        let mut rs = vec![vec![0i64; n]; 3];
        let mut cs = vec![vec![0i64; n]; 3];
        for q in 0..3 {
            for i in 0..n {
                for j in 0..n {
                    rs[q][i] += m[q][i][j];
                    cs[q][j] += m[q][i][j];
                }
            }
        }
        let imbalance = |m: &Vec<Vec<Vec<i64>>>, rs: &Vec<Vec<i64>>, cs: &Vec<Vec<i64>>| -> i64 {
            let mut s = 0i64;
            for i in 0..n {
                s += (rs[0][i] - rs[1][i]).abs()
                    + (cs[0][i] - rs[2][i]).abs()
                    + (cs[1][i] - cs[2][i]).abs();
                if excl {
                    for j in 0..n {
                        if j == i {
                            continue;
                        }
                        s += (m[0][i][j] + m[1][i][j] - rs[0][i]).max(0);
                        s += (m[0][j][i] + m[2][i][j] - cs[0][i]).max(0);
                        s += (m[1][j][i] + m[2][j][i] - cs[1][i]).max(0);
                    }
                }
            }
            s
        };
        let mut cur = imbalance(&m, &rs, &cs);
        let iters = 400_000u64;
        for it in 0..iters {
            if cur == 0 {
                return Some((m[0].clone(), m[1].clone(), m[2].clone()));
            }
            let temp = (3.0 * (1.0 - it as f64 / iters as f64)).max(0.05);
            let k = if rng.gen::<bool>() { 2 } else { 3 };
            let mut sel = Vec::with_capacity(k);
            while sel.len() < k {
                let p = positions[rng.gen_range(0..count)];
                if !sel.contains(&p) {
                    sel.push(p);
                }
            }
            let olds: Vec<i64> = sel.iter().map(|&(q, i, j)| m[q][i][j]).collect();
            let apply = |m: &mut Vec<Vec<Vec<i64>>>,
                         rs: &mut Vec<Vec<i64>>,
                         cs: &mut Vec<Vec<i64>>,
                         news: &[i64]| {
                for (idx, &(q, i, j)) in sel.iter().enumerate() {
                    let d = news[idx] - m[q][i][j];
                    m[q][i][j] = news[idx];
                    rs[q][i] += d;
                    cs[q][j] += d;
                }
            };
            let news: Vec<i64> = (0..k).map(|idx| olds[(idx + 1) % k]).collect();
            apply(&mut m, &mut rs, &mut cs, &news);
            let new = imbalance(&m, &rs, &cs);
            if new <= cur || rng.gen::<f64>() < ((cur - new) as f64 / temp).exp() {
                cur = new;
            } else {
                apply(&mut m, &mut rs, &mut cs, &olds);
            }
        }
    }
    None
}

/// Anneal with 2x2x2 alternating box moves (the kernel of the line-sum
/// operator); negative allowed cells and nonzero excluded cells are the
/// objective. Ends with greedy sweeps and a few perturb-and-resweep rounds.
fn cube_anneal(
    inst: &CubeInstance,
    x: &mut Vec<Vec<Vec<i64>>>,
    rng: &mut ChaCha8Rng,
    iters: u64,
) -> i64 {
    let n = inst.n;
    let pen = |inst: &CubeInstance, a: usize, b: usize, c: usize, v: i64| -> i64 {
        if forbidden_cell(inst, a, b, c) {
            v.abs()
        } else {
            (-v).max(0)
        }
    };
    let total_score = |x: &Vec<Vec<Vec<i64>>>| -> i64 {
        let mut s = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    s += pen(inst, a, b, c, x[a][b][c]);
                }
            }
        }
        s
    };
    let box_cells = |a1: usize, a2: usize, b1: usize, b2: usize, c1: usize, c2: usize| {
        [
            (a1, b1, c1, 1i64),
            (a1, b1, c2, -1),
            (a1, b2, c1, -1),
            (a1, b2, c2, 1),
            (a2, b1, c1, -1),
            (a2, b1, c2, 1),
            (a2, b2, c1, 1),
            (a2, b2, c2, -1),
        ]
    };
    let mut s = total_score(x);
    let phase = iters;
    for it in 0..phase {
        if s == 0 {
            return 0;
        }
        let temp = (2.0 * (1.0 - it as f64 / phase as f64)).max(0.02);
        let a1 = rng.gen_range(0..n);
        let a2 = (a1 + 1 + rng.gen_range(0..n - 1)) % n;
        let b1 = rng.gen_range(0..n);
        let b2 = (b1 + 1 + rng.gen_range(0..n - 1)) % n;
        let c1 = rng.gen_range(0..n);
        let c2 = (c1 + 1 + rng.gen_range(0..n - 1)) % n;
        let sign: i64 = if rng.gen::<bool>() { 1 } else { -1 };
        let cells = box_cells(a1, a2, b1, b2, c1, c2);
        let mut delta = 0i64;
        for &(a, b, c, e) in &cells {
            let old = x[a][b][c];
            delta += pen(inst, a, b, c, old + sign * e) - pen(inst, a, b, c, old);
        }
        if delta <= 0 || rng.gen::<f64>() < (-(delta as f64) / temp).exp() {
            for &(a, b, c, e) in &cells {
                x[a][b][c] += sign * e;
            }
            s += delta;
        }
    }
    // greedy sweeps with small random perturbations between rounds
    for _round in 0..30 {
        let mut improved = true;
        while improved {
            improved = false;
            for a1 in 0..n {
                for a2 in a1 + 1..n {
                    for b1 in 0..n {
                        for b2 in b1 + 1..n {
                            for c1 in 0..n {
                                for c2 in c1 + 1..n {
                                    for sign in [1i64, -1] {
                                        let cells = box_cells(a1, a2, b1, b2, c1, c2);
                                        let mut delta = 0i64;
                                        for &(a, b, c, e) in &cells {
                                            let old = x[a][b][c];
                                            delta += pen(inst, a, b, c, old + sign * e)
                                                - pen(inst, a, b, c, old);
                                        }
                                        if delta < 0 {
                                            for &(a, b, c, e) in &cells {
                                                x[a][b][c] += sign * e;
                                            }
                                            s += delta;
                                            improved = true;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        if s == 0 {
            return 0;
        }
        // perturb and re-anneal briefly
        for _ in 0..4 + rng.gen_range(0..8) {
            let a1 = rng.gen_range(0..n);
            let a2 = (a1 + 1 + rng.gen_range(0..n - 1)) % n;
            let b1 = rng.gen_range(0..n);
            let b2 = (b1 + 1 + rng.gen_range(0..n - 1)) % n;
            let c1 = rng.gen_range(0..n);
            let c2 = (c1 + 1 + rng.gen_range(0..n - 1)) % n;
            let sign: i64 = if rng.gen::<bool>() { 1 } else { -1 };
            for (a, b, c, e) in box_cells(a1, a2, b1, b2, c1, c2) {
                x[a][b][c] += sign * e;
            }
        }
        let reheat = iters / 8;
        s = total_score(x);
        for it in 0..reheat {
            if s == 0 {
                return 0;
            }
            let temp = (0.5 * (1.0 - it as f64 / reheat as f64)).max(0.02);
            let a1 = rng.gen_range(0..n);
            let a2 = (a1 + 1 + rng.gen_range(0..n - 1)) % n;
            let b1 = rng.gen_range(0..n);
            let b2 = (b1 + 1 + rng.gen_range(0..n - 1)) % n;
            let c1 = rng.gen_range(0..n);
            let c2 = (c1 + 1 + rng.gen_range(0..n - 1)) % n;
            let sign: i64 = if rng.gen::<bool>() { 1 } else { -1 };
            let cells = box_cells(a1, a2, b1, b2, c1, c2);
            let mut delta = 0i64;
            for &(a, b, c, e) in &cells {
                let old = x[a][b][c];
                delta += pen(inst, a, b, c, old + sign * e) - pen(inst, a, b, c, old);
            }
            if delta <= 0 || rng.gen::<f64>() < (-(delta as f64) / temp).exp() {
                for &(a, b, c, e) in &cells {
                    x[a][b][c] += sign * e;
                }
                s += delta;
            }
        }
    }
    s
}
