//! Triangle systems: a graph whose edges must each reach a prescribed
//! frequency as a sum of triangle multiplicities. All the interval searches
//! reduce to finding a nonnegative integer combination of triangles hitting
//! a target vector on the edges.

use sb_core::{GroupedPointSet, HoleSpec, PointId};
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct TriangleSystem {
    /// Flat vertex list; `points[i]` is the design point behind vertex i.
    pub points: Vec<PointId>,
    pub edges: Vec<(usize, usize)>,
    pub edge_index: HashMap<(usize, usize), usize>,
    pub triangles: Vec<[usize; 3]>,
    /// For each triangle, its three edge indices.
    pub tri_edges: Vec<[usize; 3]>,
    /// adjacency[i][j] for quick lookup.
    adj: Vec<Vec<bool>>,
}

impl TriangleSystem {
    fn build(points: Vec<PointId>, adj: Vec<Vec<bool>>, tri_ok: impl Fn(usize, usize, usize) -> bool) -> Self {
        let n = points.len();
        let mut edges = Vec::new();
        let mut edge_index = HashMap::new();
        for i in 0..n {
            for j in i + 1..n {
                if adj[i][j] {
                    edge_index.insert((i, j), edges.len());
                    edges.push((i, j));
                }
            }
        }
        let mut triangles = Vec::new();
        let mut tri_edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !adj[i][j] {
                    continue;
                }
                for k in j + 1..n {
                    if adj[i][k] && adj[j][k] && tri_ok(i, j, k) {
                        triangles.push([i, j, k]);
                        tri_edges.push([
                            edge_index[&(i, j)],
                            edge_index[&(i, k)],
                            edge_index[&(j, k)],
                        ]);
                    }
                }
            }
        }
        TriangleSystem {
            points,
            edges,
            edge_index,
            triangles,
            tri_edges,
            adj,
        }
    }

    /// Cross-group pairs of a grouped point set; with a hole, edges between
    /// two hole points are removed entirely (their frequency is fixed at 0)
    /// and so are triangles containing two hole points.
    pub fn multipartite(grouping: &GroupedPointSet, hole: Option<&HoleSpec>) -> Self {
        let points: Vec<PointId> = grouping.points().collect();
        let n = points.len();
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let cross = points[i].group != points[j].group;
                let hole_pair = hole
                    .map(|h| h.is_hole_pair(points[i], points[j]))
                    .unwrap_or(false);
                adj[i][j] = cross && !hole_pair;
            }
        }
        TriangleSystem::build(points, adj, |_, _, _| true)
    }

    /// The product of a complete graph K_m with K3: vertices (i, j) with
    /// i < m in the slot and j < 3 in the group, adjacent when both
    /// coordinates differ. Triangles take one vertex per K3 class with
    /// pairwise distinct K_m coordinates.
    pub fn product_k3(m: usize) -> Self {
        let mut points = Vec::new();
        for j in 0..3 {
            for i in 0..m {
                points.push(PointId::new(j, i));
            }
        }
        let n = points.len();
        let mut adj = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                adj[a][b] = points[a].group != points[b].group && points[a].slot != points[b].slot;
            }
        }
        TriangleSystem::build(points, adj, |_, _, _| true)
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn edge_of(&self, i: usize, j: usize) -> Option<usize> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edge_index.get(&key).copied()
    }

    /// Residual check: does x (triangle multiplicities) produce exactly f?
    pub fn produces(&self, x: &[i64], f: &[i64]) -> bool {
        let mut got = vec![0i64; self.edges.len()];
        for (t, &m) in x.iter().enumerate() {
            for &e in &self.tri_edges[t] {
                got[e] += m;
            }
        }
        got == f
    }
}
