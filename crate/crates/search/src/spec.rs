//! Declarative search interface: describe the grouping and the target
//! frequency profile, get back a verified design, a certified infeasibility,
//! or an honest budget exhaustion.

use sb_core::{
    Block, BlockMultiset, Design, DesignKind, GroupedPointSet, HoleSpec, PointId,
};

use crate::enumerate::{self, EnumerateResult};
use crate::solver::{self, Budget, CubeInstance};
use crate::system::TriangleSystem;

/// What the pair frequencies should look like.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    /// Consecutive values mu..mu+L-1, one per cross pair, in some order.
    Interval { mu: u64 },
    /// Every cross pair covered exactly lambda times.
    Constant { lambda: u64 },
    /// Arbitrary multiset of frequencies, one per cross pair.
    Explicit(Vec<u64>),
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub grouping: GroupedPointSet,
    pub target: Target,
    /// Hole whose internal pairs must stay uncovered, if any.
    pub hole: Option<HoleSpec>,
    /// Upper bound on any single block's multiplicity (None = unbounded).
    pub cap: Option<u64>,
    pub seed: u64,
    /// Attempt / iteration budget for the randomized solver, node budget for
    /// the exhaustive one.
    pub node_budget: u64,
}

impl SearchSpec {
    pub fn interval(grouping: GroupedPointSet, mu: u64, seed: u64) -> Self {
        SearchSpec {
            grouping,
            target: Target::Interval { mu },
            hole: None,
            cap: None,
            seed,
            node_budget: 50_000_000,
        }
    }

    fn target_multiset(&self) -> Vec<u64> {
        let n_pairs = match &self.hole {
            None => self.grouping.num_cross_pairs(),
            Some(_) => {
                // one hole point per group, so the hole spans C(u,2) pairs
                let u = self.grouping.num_groups();
                self.grouping.num_cross_pairs() - u * (u - 1) / 2
            }
        };
        match &self.target {
            Target::Interval { mu } => (*mu..*mu + n_pairs as u64).collect(),
            Target::Constant { lambda } => vec![*lambda; n_pairs],
            Target::Explicit(v) => v.clone(),
        }
    }
}

pub enum SearchOutcome {
    Found(Design),
    /// Certified: the bounded space contains no solution.
    Infeasible,
    BudgetExhausted,
}

/// Dispatch on instance shape. Small systems go to the exhaustive
/// enumerator (whose negative answers are certificates); everything else
/// goes to the randomized integer solver.
pub fn search_design(spec: &SearchSpec) -> SearchOutcome {
    let target = spec.target_multiset();
    let total: u64 = target.iter().sum();
    if total % 3 != 0 {
        return SearchOutcome::Infeasible;
    }
    let sys = TriangleSystem::multipartite(&spec.grouping, spec.hole.as_ref());
    if sys.edges.len() != target.len() {
        return SearchOutcome::Infeasible;
    }
    if sys.triangles.is_empty() {
        return if total == 0 {
            SearchOutcome::Found(design_from(spec, &sys, &[]))
        } else {
            SearchOutcome::Infeasible
        };
    }

    // small instances (and anything with a multiplicity cap) are enumerated
    // exhaustively so a negative answer is a proof
    let small = spec.grouping.num_points() <= 12 && spec.cap.is_some();
    if small || sys.triangles.len() <= 6 {
        let max_f = *target.iter().max().unwrap();
        let cap = spec.cap.unwrap_or(max_f);
        return match enumerate::enumerate(&sys, &target, cap, spec.node_budget) {
            EnumerateResult::Solution(m) => {
                SearchOutcome::Found(design_from(spec, &sys, &m))
            }
            EnumerateResult::Infeasible => SearchOutcome::Infeasible,
            EnumerateResult::BudgetExhausted => SearchOutcome::BudgetExhausted,
        };
    }

    match &spec.target {
        Target::Interval { mu } => {
            let singletons = spec.grouping.group_sizes().iter().all(|&s| s == 1);
            // complete K4/K5 have closed-form solvers; try random interval
            // placements through them
            if singletons && spec.hole.is_none() && spec.grouping.num_groups() <= 5 {
                return small_complete_interval(spec, &sys, *mu);
            }
            // three equal groups with no hole form a cube: line sums along
            // the third axis are the pair frequencies
            if spec.grouping.num_groups() == 3
                && spec.hole.is_none()
                && spec.grouping.uniform_type().is_some()
            {
                let n = spec.grouping.group_sizes()[0];
                let inst = CubeInstance {
                    n,
                    exclude_diagonal: false,
                    mu: *mu,
                };
                return match solver::solve_cube(&inst, spec.seed, Budget::default()) {
                    Some(sol) => SearchOutcome::Found(cube_design(spec, n, &sol.x)),
                    None => SearchOutcome::BudgetExhausted,
                };
            }
            match solver::solve_multipartite_interval(
                &sys,
                spec.hole.as_ref(),
                *mu,
                spec.seed,
                Budget::default(),
            ) {
                Some(m) => SearchOutcome::Found(design_from(spec, &sys, &m)),
                None => SearchOutcome::BudgetExhausted,
            }
        }
        _ => {
            // no specialized solver: bounded enumeration only
            let max_f = *target.iter().max().unwrap();
            let cap = spec.cap.unwrap_or(max_f);
            match enumerate::enumerate(&sys, &target, cap, spec.node_budget) {
                EnumerateResult::Solution(m) => {
                    SearchOutcome::Found(design_from(spec, &sys, &m))
                }
                EnumerateResult::Infeasible => SearchOutcome::Infeasible,
                EnumerateResult::BudgetExhausted => SearchOutcome::BudgetExhausted,
            }
        }
    }
}

/// Complete graphs on 4 or 5 points: shuffle the interval onto the edges and
/// run the exact small solver; each try is constant work.
fn small_complete_interval(
    spec: &SearchSpec,
    sys: &TriangleSystem,
    mu: u64,
) -> SearchOutcome {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let ne = sys.edges.len();
    let mut vals: Vec<i64> = (0..ne as i64).map(|i| mu as i64 + i).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..200_000 {
        vals.shuffle(&mut rng);
        // K4 (6 edges) never reaches here: its 4 triangles were handled by
        // the exhaustive branch
        let mult: Option<Vec<i64>> = match ne {
            10 => {
                let f: [i64; 10] = vals.clone().try_into().unwrap();
                crate::exactsmall::solve_k5(&f).map(|y| y.to_vec())
            }
            _ => break,
        };
        if let Some(m) = mult {
            return SearchOutcome::Found(design_from(spec, sys, &m));
        }
    }
    // tiny instance: fall back to proof-capable enumeration
    let target: Vec<u64> = (mu..mu + ne as u64).collect();
    let cap = mu + ne as u64;
    match enumerate::enumerate(sys, &target, cap, spec.node_budget) {
        EnumerateResult::Solution(m) => SearchOutcome::Found(design_from(spec, sys, &m)),
        EnumerateResult::Infeasible => SearchOutcome::Infeasible,
        EnumerateResult::BudgetExhausted => SearchOutcome::BudgetExhausted,
    }
}

fn design_from(spec: &SearchSpec, sys: &TriangleSystem, mult: &[i64]) -> Design {
    let mut blocks = BlockMultiset::new();
    for (t, &m) in mult.iter().enumerate() {
        if m > 0 {
            let [i, j, k] = sys.triangles[t];
            let b = Block::new(vec![sys.points[i], sys.points[j], sys.points[k]]);
            blocks.add(b, m as u64);
        }
    }
    let kind = kind_for(spec);
    Design {
        grouping: spec.grouping.clone(),
        blocks,
        kind,
    }
}

fn kind_for(spec: &SearchSpec) -> DesignKind {
    match (&spec.target, &spec.hole) {
        (Target::Interval { mu }, None) => {
            if spec.grouping.group_sizes().iter().all(|&s| s == 1) {
                DesignKind::Sbts { mu: *mu }
            } else {
                DesignKind::Sbgdd { mu: *mu }
            }
        }
        (Target::Interval { mu }, Some(h)) => DesignKind::IncompleteSbgdd {
            mu: *mu,
            hole: h.clone(),
        },
        (Target::Constant { lambda }, _) => DesignKind::Gdd {
            lambda: *lambda,
            sizes: vec![3],
        },
        (Target::Explicit(_), _) => DesignKind::Sbgdd { mu: 0 },
    }
}

fn cube_design(spec: &SearchSpec, n: usize, x: &[Vec<Vec<i64>>]) -> Design {
    let mut blocks = BlockMultiset::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if x[a][b][c] > 0 {
                    let blk = Block::new(vec![
                        PointId::new(0, a),
                        PointId::new(1, b),
                        PointId::new(2, c),
                    ]);
                    blocks.add(blk, x[a][b][c] as u64);
                }
            }
        }
    }
    let mu = match spec.target {
        Target::Interval { mu } => mu,
        _ => 0,
    };
    Design {
        grouping: spec.grouping.clone(),
        blocks,
        kind: if mu == 0 && spec.grouping.num_groups() == 3 {
            DesignKind::SbCube
        } else {
            DesignKind::Sbgdd { mu }
        },
    }
}

/// Greedy head: walk blocks in lexicographic point order and hand the
/// largest still-needed frequencies to the earliest blocks, so the biggest
/// targets get pinned down before randomized search sees the residual.
/// Returns the partial block multiset and the set of pairs it closed.
pub fn greedy_frequency_assignment(
    spec: &SearchSpec,
) -> (BlockMultiset, Vec<(PointId, PointId)>) {
    let sys = TriangleSystem::multipartite(&spec.grouping, spec.hole.as_ref());
    let mut needed = spec.target_multiset();
    needed.sort_unstable();
    let mut freq = vec![0u64; sys.edges.len()];
    let mut closed = vec![false; sys.edges.len()];
    let mut blocks = BlockMultiset::new();
    // triangles are generated in lexicographic order already
    for (t, es) in sys.tri_edges.iter().enumerate() {
        let Some(&want) = needed.last() else { break };
        if es.iter().any(|&e| closed[e]) {
            continue;
        }
        let cur = es.iter().map(|&e| freq[e]).max().unwrap();
        if cur >= want {
            continue;
        }
        let m = want - cur;
        // only take the step if exactly one pair lands on the target value
        // and the others stay strictly below it
        let landing: Vec<usize> = es
            .iter()
            .copied()
            .filter(|&e| freq[e] + m == want)
            .collect();
        if landing.len() != 1 {
            continue;
        }
        for &e in es {
            freq[e] += m;
        }
        let e = landing[0];
        closed[e] = true;
        needed.pop();
        let [i, j, k] = sys.triangles[t];
        let b = Block::new(vec![sys.points[i], sys.points[j], sys.points[k]]);
        blocks.add(b, m);
    }
    let pairs = closed
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(e, _)| sys.edges[e])
        .map(|(i, j)| (sys.points[i], sys.points[j]))
        .collect();
    (blocks, pairs)
}
