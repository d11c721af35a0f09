//! Bounded exhaustive enumeration over block multiplicities.
//!
//! Only practical for very small systems; this is what backs certified
//! infeasibility answers, so it prunes conservatively and reports whether
//! the whole space was actually covered.

use crate::system::TriangleSystem;

pub enum EnumerateResult {
    /// Triangle multiplicities realizing the target multiset.
    Solution(Vec<i64>),
    /// The full bounded space was searched, no solution exists.
    Infeasible,
    /// Node budget ran out before the space was covered.
    BudgetExhausted,
}

/// Search for triangle multiplicities (each in 0..=cap) whose induced pair
/// frequencies equal `target` as a multiset. Budget counts search nodes.
pub fn enumerate(
    sys: &TriangleSystem,
    target: &[u64],
    cap: u64,
    node_budget: u64,
) -> EnumerateResult {
    let mut sorted_target: Vec<u64> = target.to_vec();
    sorted_target.sort_unstable();
    if sorted_target.len() != sys.edges.len() {
        return EnumerateResult::Infeasible;
    }
    let total: u64 = sorted_target.iter().sum();
    if total % 3 != 0 {
        return EnumerateResult::Infeasible;
    }
    let max_f = *sorted_target.last().unwrap_or(&0);
    let mut freq = vec![0u64; sys.edges.len()];
    let mut mult = vec![0i64; sys.triangles.len()];
    let mut nodes = 0u64;
    // remaining[t][e] = how much frequency edge e can still gain from
    // triangles t..end
    let mut gain = vec![vec![0u64; sys.edges.len()]; sys.triangles.len() + 1];
    for t in (0..sys.triangles.len()).rev() {
        for e in 0..sys.edges.len() {
            gain[t][e] = gain[t + 1][e];
        }
        for &e in &sys.tri_edges[t] {
            gain[t][e] += cap;
        }
    }
    match dfs(
        sys,
        &sorted_target,
        cap,
        max_f,
        0,
        &mut freq,
        &mut mult,
        &gain,
        &mut nodes,
        node_budget,
    ) {
        Some(true) => EnumerateResult::Solution(mult),
        Some(false) => EnumerateResult::Infeasible,
        None => EnumerateResult::BudgetExhausted,
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    sys: &TriangleSystem,
    target: &[u64],
    cap: u64,
    max_f: u64,
    t: usize,
    freq: &mut [u64],
    mult: &mut [i64],
    gain: &[Vec<u64>],
    nodes: &mut u64,
    budget: u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    if t == sys.triangles.len() {
        let mut got: Vec<u64> = freq.to_vec();
        got.sort_unstable();
        return Some(got == target);
    }
    // an edge no remaining triangle touches is frozen; its value must occur
    // in the target multiset
    for e in 0..freq.len() {
        if gain[t][e] == 0 && !target.contains(&freq[e]) {
            return Some(false);
        }
    }
    for m in 0..=cap as i64 {
        let mut ok = true;
        for &e in &sys.tri_edges[t] {
            if freq[e] + m as u64 > max_f {
                ok = false;
                break;
            }
        }
        if !ok {
            break;
        }
        for &e in &sys.tri_edges[t] {
            freq[e] += m as u64;
        }
        mult[t] = m;
        let r = dfs(sys, target, cap, max_f, t + 1, freq, mult, gain, nodes, budget);
        for &e in &sys.tri_edges[t] {
            freq[e] -= m as u64;
        }
        mult[t] = 0;
        match r {
            Some(true) => {
                mult[t] = m;
                for &e in &sys.tri_edges[t] {
                    freq[e] += m as u64;
                }
                return Some(true);
            }
            Some(false) => {}
            None => return None,
        }
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sb_core::GroupedPointSet;

    #[test]
    fn four_points_interval_from_zero_is_infeasible() {
        let g = GroupedPointSet::uniform(1, 4);
        let sys = TriangleSystem::multipartite(&g, None);
        let target: Vec<u64> = (0..6).collect();
        match enumerate(&sys, &target, 5, 10_000_000) {
            EnumerateResult::Infeasible => {}
            _ => panic!("expected certified infeasibility"),
        }
    }

    #[test]
    fn four_points_interval_from_one_found() {
        let g = GroupedPointSet::uniform(1, 4);
        let sys = TriangleSystem::multipartite(&g, None);
        let target: Vec<u64> = (1..7).collect();
        match enumerate(&sys, &target, 7, 10_000_000) {
            EnumerateResult::Solution(m) => {
                let total: i64 = m.iter().sum();
                assert_eq!(total, 7); // 21 / 3
            }
            _ => panic!("expected a solution"),
        }
    }
}
