//! Kernel-move annealing. A "move" is an integer vector in the nullspace of
//! the edge-triangle incidence: applying it changes triangle multiplicities
//! without changing any edge frequency. Starting from an exact integer
//! solution (any sign), annealing drives the negative entries to zero.

use crate::exact;
use crate::system::TriangleSystem;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct Move {
    pub deltas: Vec<(usize, i64)>,
}

/// Kernel basis vectors of the subsystems induced by 6-vertex subsets.
/// Enumerates all subsets when there are few, otherwise samples.
pub fn subset_kernel_moves(
    sys: &TriangleSystem,
    rng: &mut ChaCha8Rng,
    max_moves: usize,
) -> Vec<Move> {
    let n = sys.points.len();
    let mut moves: Vec<Move> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    let mut tri_of = std::collections::HashMap::new();
    for (t, v) in sys.triangles.iter().enumerate() {
        tri_of.insert(*v, t);
    }

    let handle_subset = |s: &[usize], moves: &mut Vec<Move>, seen: &mut std::collections::HashSet<Vec<(usize, i64)>>| {
        let mut edges = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if let Some(e) = sys.edge_of(s[i], s[j]) {
                    edges.push(e);
                }
            }
        }
        let mut tris = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    let mut v = [s[i], s[j], s[k]];
                    v.sort_unstable();
                    if let Some(&t) = tri_of.get(&v) {
                        tris.push(t);
                    }
                }
            }
        }
        if tris.len() <= edges.len() {
            return; // no kernel to be had
        }
        let mut a = vec![vec![0i128; tris.len()]; edges.len()];
        for (row, &e) in edges.iter().enumerate() {
            for (col, &t) in tris.iter().enumerate() {
                if sys.tri_edges[t].contains(&e) {
                    a[row][col] = 1;
                }
            }
        }
        for v in exact::nullspace(&a) {
            let mut deltas: Vec<(usize, i64)> = v
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (tris[i], c as i64))
                .collect();
            deltas.sort_unstable();
            if !deltas.is_empty() && seen.insert(deltas.clone()) {
                moves.push(Move { deltas });
            }
        }
    };

    if n <= 14 {
        // all 6-subsets
        let mut s = [0usize; 6];
        fn rec(
            n: usize,
            start: usize,
            depth: usize,
            s: &mut [usize; 6],
            f: &mut dyn FnMut(&[usize]),
        ) {
            if depth == 6 {
                f(s);
                return;
            }
            for v in start..n {
                s[depth] = v;
                rec(n, v + 1, depth + 1, s, f);
            }
        }
        let mut cb = |s: &[usize]| handle_subset(s, &mut moves, &mut seen);
        rec(n, 0, 0, &mut s, &mut cb);
    } else {
        // sampling is cheap relative to annealing; oversample subsets since
        // many contribute few or duplicate vectors
        for _ in 0..max_moves.saturating_mul(6) {
            let mut s: Vec<usize> = Vec::new();
            while s.len() < 6 {
                let v = rng.gen_range(0..n);
                if !s.contains(&v) {
                    s.push(v);
                }
            }
            s.sort_unstable();
            handle_subset(&s, &mut moves, &mut seen);
            if moves.len() >= max_moves {
                break;
            }
        }
    }
    moves
}

fn penalty(v: i64, forbidden: bool) -> i64 {
    if forbidden {
        v.abs()
    } else {
        (-v).max(0)
    }
}

pub fn score(x: &[i64], forbidden: Option<&[bool]>) -> i64 {
    x.iter()
        .enumerate()
        .map(|(t, &v)| penalty(v, forbidden.map(|f| f[t]).unwrap_or(false)))
        .sum()
}

/// Simulated annealing over the move pool; returns the final score
/// (0 = feasible). Deterministic given the RNG state.
pub fn anneal(
    x: &mut [i64],
    moves: &[Move],
    forbidden: Option<&[bool]>,
    rng: &mut ChaCha8Rng,
    iters: u64,
    t0: f64,
) -> i64 {
    let mut s = score(x, forbidden);
    if moves.is_empty() {
        return s;
    }
    for it in 0..iters {
        if s == 0 {
            return 0;
        }
        let temp = (t0 * (1.0 - it as f64 / iters as f64)).max(0.02);
        let mv = &moves[rng.gen_range(0..moves.len())];
        let sign: i64 = if rng.gen::<bool>() { 1 } else { -1 };
        let mut delta = 0i64;
        for &(t, c) in &mv.deltas {
            let fb = forbidden.map(|f| f[t]).unwrap_or(false);
            let old = x[t];
            delta += penalty(old + sign * c, fb) - penalty(old, fb);
        }
        if delta <= 0 || rng.gen::<f64>() < (-(delta as f64) / temp).exp() {
            for &(t, c) in &mv.deltas {
                x[t] += sign * c;
            }
            s += delta;
        }
    }
    s
}

/// Steepest-descent sweeps over the whole move pool until stuck.
pub fn greedy_sweep(x: &mut [i64], moves: &[Move], forbidden: Option<&[bool]>) -> i64 {
    let mut s = score(x, forbidden);
    let mut improved = true;
    while improved && s > 0 {
        improved = false;
        for mv in moves {
            for sign in [1i64, -1] {
                let mut delta = 0i64;
                for &(t, c) in &mv.deltas {
                    let fb = forbidden.map(|f| f[t]).unwrap_or(false);
                    let old = x[t];
                    delta += penalty(old + sign * c, fb) - penalty(old, fb);
                }
                if delta < 0 {
                    for &(t, c) in &mv.deltas {
                        x[t] += sign * c;
                    }
                    s += delta;
                    improved = true;
                }
            }
        }
    }
    s
}
