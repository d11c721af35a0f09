//! Integer (sign-unrestricted) solutions of triangle systems. The annealer
//! then removes negative multiplicities with kernel moves, which preserve
//! all edge sums exactly.

use crate::exact;
use crate::system::TriangleSystem;

/// Peel vertices one at a time, routing each peeled vertex's edge demands
/// through triangles into the remaining graph, until only a 5-clique base
/// remains; the base system is invertible and solved exactly. `order` lists
/// the vertices to peel, base last (exactly 5 left over).
pub fn peel(sys: &TriangleSystem, f: &[i64], order: &[usize]) -> Option<Vec<i64>> {
    let n = sys.points.len();
    assert_eq!(order.len(), n - 5);
    let mut x = vec![0i64; sys.triangles.len()];
    let mut cur = f.to_vec();
    let mut alive = vec![true; n];

    // triangle lookup by vertex triple
    let mut tri_of = std::collections::HashMap::new();
    for (t, v) in sys.triangles.iter().enumerate() {
        tri_of.insert(*v, t);
    }
    let tri_lookup = |a: usize, b: usize, c: usize| -> Option<usize> {
        let mut v = [a, b, c];
        v.sort_unstable();
        tri_of.get(&v).copied()
    };

    for &w in order {
        // remaining neighbors with their demands
        let nbrs: Vec<usize> = (0..n)
            .filter(|&a| a != w && alive[a] && sys.adjacent(w, a))
            .collect();
        let demand: Vec<i64> = nbrs
            .iter()
            .map(|&a| cur[sys.edge_of(w, a).unwrap()])
            .collect();
        if demand.iter().sum::<i64>() % 2 != 0 {
            return None;
        }
        // link graph: pairs (a,b) usable in a triangle with w
        let k = nbrs.len();
        let usable = |i: usize, j: usize| -> Option<usize> {
            if !sys.adjacent(nbrs[i], nbrs[j]) {
                return None;
            }
            tri_lookup(w, nbrs[i], nbrs[j])
        };
        // spanning tree of the link via BFS
        let mut parent: Vec<Option<usize>> = vec![None; k];
        let mut seen = vec![false; k];
        let mut bfs_order = vec![0usize];
        seen[0] = true;
        let mut head = 0;
        while head < bfs_order.len() {
            let i = bfs_order[head];
            head += 1;
            for j in 0..k {
                if !seen[j] && usable(i, j).is_some() {
                    seen[j] = true;
                    parent[j] = Some(i);
                    bfs_order.push(j);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return None; // link not connected
        }
        // satisfy demands leaf-to-root along the tree: the edge to the
        // parent absorbs whatever demand the subtree still owes
        let mut h = std::collections::HashMap::<(usize, usize), i64>::new();
        let mut residual = demand.clone();
        for &i in bfs_order.iter().skip(1).rev() {
            let p = parent[i].unwrap();
            let key = if i < p { (i, p) } else { (p, i) };
            let amt = residual[i];
            *h.entry(key).or_insert(0) += amt;
            residual[p] -= amt;
            residual[i] = 0;
        }
        // the root keeps an even residual; cancel it with a triangle at the root
        let root = 0;
        let rem = residual[root];
        if rem != 0 {
            if rem % 2 != 0 {
                return None;
            }
            // find x,y adjacent to root and each other in the link
            let mut found = false;
            'outer: for i in 0..k {
                if i == root || usable(root, i).is_none() {
                    continue;
                }
                for j in i + 1..k {
                    if j == root || usable(root, j).is_none() || usable(i, j).is_none() {
                        continue;
                    }
                    let s = rem / 2;
                    for (key, delta) in [
                        ((root.min(i), root.max(i)), s),
                        ((root.min(j), root.max(j)), s),
                        ((i.min(j), i.max(j)), -s),
                    ] {
                        *h.entry(key).or_insert(0) += delta;
                    }
                    found = true;
                    break 'outer;
                }
            }
            if !found {
                return None;
            }
        }
        // apply H: each link edge (a,b) becomes the triangle (w,a,b)
        for ((i, j), m) in h {
            if m == 0 {
                continue;
            }
            let t = usable(i, j).unwrap();
            x[t] += m;
            cur[sys.edge_of(w, nbrs[i]).unwrap()] -= m;
            cur[sys.edge_of(w, nbrs[j]).unwrap()] -= m;
            cur[sys.edge_of(nbrs[i], nbrs[j]).unwrap()] -= m;
        }
        // w's own edges should now be exactly consumed
        for (&a, _) in nbrs.iter().zip(&demand) {
            if cur[sys.edge_of(w, a).unwrap()] != 0 {
                return None;
            }
        }
        alive[w] = false;
    }

    // base: the 5 remaining vertices form a clique with all 10 triangles
    let base: Vec<usize> = (0..n).filter(|&a| alive[a]).collect();
    debug_assert_eq!(base.len(), 5);
    let mut base_edges = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            base_edges.push(sys.edge_of(base[i], base[j])?);
        }
    }
    let mut base_tris = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            for l in j + 1..5 {
                base_tris.push(tri_lookup(base[i], base[j], base[l])?);
            }
        }
    }
    let mut a = vec![vec![0i128; 10]; 10];
    let mut b = vec![0i128; 10];
    for (row, &e) in base_edges.iter().enumerate() {
        b[row] = cur[e] as i128;
        for (col, &t) in base_tris.iter().enumerate() {
            if sys.tri_edges[t].contains(&e) {
                a[row][col] = 1;
            }
        }
    }
    let sol = exact::solve(&a, &b)?;
    for (col, &t) in base_tris.iter().enumerate() {
        x[t] += sol[col].as_integer()? as i64;
    }
    if sys.produces(&x, f) {
        Some(x)
    } else {
        None
    }
}

/// Tri-partite "corner" solution: with groups of sizes (n,n,n) and cell
/// variables x[a][b][c], fix all interior cells at 0 and read the boundary
/// off the marginals. Needs the three marginal matrices to be consistent
/// (per-vertex direction sums equal), which the assignment stage enforces.
pub fn cube_corner(n: usize, a_m: &[Vec<i64>], b_m: &[Vec<i64>], c_m: &[Vec<i64>]) -> Vec<Vec<Vec<i64>>> {
    let mut x = vec![vec![vec![0i64; n]; n]; n];
    for a in 0..n - 1 {
        for b in 0..n - 1 {
            x[a][b][n - 1] = a_m[a][b];
        }
    }
    for a in 0..n - 1 {
        for c in 0..n - 1 {
            x[a][n - 1][c] = b_m[a][c];
        }
    }
    for b in 0..n - 1 {
        for c in 0..n - 1 {
            x[n - 1][b][c] = c_m[b][c];
        }
    }
    for a in 0..n - 1 {
        let s: i64 = (0..n - 1).map(|c| x[a][n - 1][c]).sum();
        x[a][n - 1][n - 1] = a_m[a][n - 1] - s;
    }
    for b in 0..n - 1 {
        let s: i64 = (0..n - 1).map(|c| x[n - 1][b][c]).sum();
        x[n - 1][b][n - 1] = a_m[n - 1][b] - s;
    }
    for c in 0..n - 1 {
        let s: i64 = (0..n - 1).map(|b| x[n - 1][b][c]).sum();
        x[n - 1][n - 1][c] = b_m[n - 1][c] - s;
    }
    let s: i64 = (0..n - 1).map(|c| x[n - 1][n - 1][c]).sum();
    x[n - 1][n - 1][n - 1] = a_m[n - 1][n - 1] - s;
    x
}
