use crate::freq::pair_frequencies_lenient;
use crate::types::{
    Design, DesignKind, FrequencyInterval, HoleSpec, LatinSquare, PointId,
};
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors that make a block multiset malformed (as opposed to a design that
/// is well-formed but fails its claimed invariants).
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum StructuralError {
    #[error("block point {point:?} outside the grouping")]
    PointOutOfRange { point: PointId },
    #[error("block contains two points {first:?}, {second:?} of one group")]
    WithinGroupBlock { first: PointId, second: PointId },
}

/// First reason a verification failed. Each interval defect gets its own
/// name so reports distinguish a gap from a duplicate from a wrong start.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    WithinGroupPair { first: PointId, second: PointId },
    DuplicateFrequency { value: u64 },
    GapInInterval { value: u64 },
    WrongStart { expected: u64, found: u64 },
    WrongFrequency { pair: (PointId, PointId), expected: u64, found: u64 },
    HolePairCovered { pair: (PointId, PointId), found: u64 },
    DisallowedBlockSize { size: usize },
    NonTransversalBlock { group: usize, count: usize },
    NotLatin { row: usize, col: usize },
    NotIdempotent { row: usize },
    OrthogonalityFailure { first: usize, second: usize },
    GroupingMismatch { reason: String },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::WithinGroupPair { first, second } => {
                write!(f, "non-zero within-group frequency on ({first:?}, {second:?})")
            }
            Violation::DuplicateFrequency { value } => {
                write!(f, "frequency {value} occurs more than once")
            }
            Violation::GapInInterval { value } => {
                write!(f, "frequency {value} missing from the interval")
            }
            Violation::WrongStart { expected, found } => {
                write!(f, "interval starts at {found}, expected {expected}")
            }
            Violation::WrongFrequency { pair, expected, found } => {
                write!(f, "pair ({:?}, {:?}) has frequency {found}, expected {expected}", pair.0, pair.1)
            }
            Violation::HolePairCovered { pair, found } => {
                write!(f, "hole pair ({:?}, {:?}) covered {found} times", pair.0, pair.1)
            }
            Violation::DisallowedBlockSize { size } => write!(f, "block size {size} not allowed"),
            Violation::NonTransversalBlock { group, count } => {
                write!(f, "block meets group {group} {count} times")
            }
            Violation::NotLatin { row, col } => {
                write!(f, "latin property fails at row {row}, column {col}")
            }
            Violation::NotIdempotent { row } => write!(f, "cell ({row},{row}) != {row}"),
            Violation::OrthogonalityFailure { first, second } => {
                write!(f, "squares {first} and {second} are not orthogonal")
            }
            Violation::GroupingMismatch { reason } => write!(f, "grouping mismatch: {reason}"),
        }
    }
}

/// Outcome of a verifier run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub pass: bool,
    /// Sorted multiset of observed cross-pair frequencies.
    pub observed: Vec<u64>,
    pub violation: Option<Violation>,
    /// Total block multiplicity.
    pub block_count: u64,
}

impl VerificationReport {
    fn passing(observed: Vec<u64>, block_count: u64) -> Self {
        VerificationReport {
            pass: true,
            observed,
            violation: None,
            block_count,
        }
    }

    fn failing(observed: Vec<u64>, block_count: u64, violation: Violation) -> Self {
        VerificationReport {
            pass: false,
            observed,
            violation: Some(violation),
            block_count,
        }
    }
}

fn check_interval(
    observed: &[u64],
    interval: FrequencyInterval,
) -> Option<Violation> {
    // observed is sorted; compare against start..=end
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for &v in observed {
        *counts.entry(v).or_insert(0) += 1;
    }
    for (&v, &c) in &counts {
        if c > 1 {
            return Some(Violation::DuplicateFrequency { value: v });
        }
    }
    if observed.len() as u64 != interval.length {
        return Some(Violation::GroupingMismatch {
            reason: format!(
                "{} cross pairs but interval length {}",
                observed.len(),
                interval.length
            ),
        });
    }
    if observed.first() != Some(&interval.start) {
        return Some(Violation::WrongStart {
            expected: interval.start,
            found: *observed.first().unwrap_or(&0),
        });
    }
    for v in interval.values() {
        if !counts.contains_key(&v) {
            return Some(Violation::GapInInterval { value: v });
        }
    }
    None
}

fn check_sizes(d: &Design, allowed: &[usize]) -> Option<Violation> {
    for (b, _) in d.blocks.iter() {
        if !allowed.contains(&b.len()) {
            return Some(Violation::DisallowedBlockSize { size: b.len() });
        }
    }
    None
}

/// Common body for SBGDD-style checks: within-group zero, triples only,
/// cross frequencies exactly the interval; `hole` pairs must be zero and sit
/// outside the interval.
fn verify_interval_design(
    d: &Design,
    mu: u64,
    hole: Option<&HoleSpec>,
) -> VerificationReport {
    let (table, within) = match pair_frequencies_lenient(&d.blocks, &d.grouping) {
        Ok(x) => x,
        Err(e) => {
            return VerificationReport::failing(
                vec![],
                d.blocks.total_multiplicity(),
                Violation::GroupingMismatch { reason: e.to_string() },
            )
        }
    };
    let block_count = d.blocks.total_multiplicity();
    let mut observed: Vec<u64> = Vec::new();
    let mut hole_violation = None;
    for (&(a, b), &f) in table.iter() {
        if let Some(h) = hole {
            if h.is_hole_pair(a, b) {
                if f != 0 && hole_violation.is_none() {
                    hole_violation = Some(Violation::HolePairCovered { pair: (a, b), found: f });
                }
                continue;
            }
        }
        observed.push(f);
    }
    observed.sort_unstable();
    if let Some(v) = within {
        return VerificationReport::failing(observed, block_count, v);
    }
    if let Some(v) = hole_violation {
        return VerificationReport::failing(observed, block_count, v);
    }
    if let Some(v) = check_sizes(d, &[3]) {
        return VerificationReport::failing(observed, block_count, v);
    }
    let interval = FrequencyInterval::new(mu, observed.len().max(1) as u64);
    if observed.is_empty() {
        return VerificationReport::failing(
            observed,
            block_count,
            Violation::GroupingMismatch { reason: "no cross pairs".into() },
        );
    }
    if let Some(v) = check_interval(&observed, interval) {
        return VerificationReport::failing(observed, block_count, v);
    }
    VerificationReport::passing(observed, block_count)
}

/// Cross frequencies must be exactly {mu, ..., mu+L-1}, within-group zero.
pub fn verify_sbgdd(d: &Design) -> VerificationReport {
    let mu = match &d.kind {
        DesignKind::Sbgdd { mu } | DesignKind::Sbts { mu } => *mu,
        DesignKind::SbCube => 0,
        _ => {
            return VerificationReport::failing(
                vec![],
                d.blocks.total_multiplicity(),
                Violation::GroupingMismatch { reason: "kind is not SBGDD-like".into() },
            )
        }
    };
    verify_interval_design(d, mu, None)
}

/// SBGDD with a hole: hole pairs zero, all other cross pairs the interval.
pub fn verify_incomplete_sbgdd(d: &Design) -> VerificationReport {
    match &d.kind {
        DesignKind::IncompleteSbgdd { mu, hole } => verify_interval_design(d, *mu, Some(hole)),
        _ => VerificationReport::failing(
            vec![],
            d.blocks.total_multiplicity(),
            Violation::GroupingMismatch { reason: "kind is not incomplete SBGDD".into() },
        ),
    }
}

/// Constant-index check: every cross pair at lambda, within-group zero,
/// block sizes restricted to the allowed set.
pub fn verify_gdd(d: &Design) -> VerificationReport {
    let (lambda, sizes, hole) = match &d.kind {
        DesignKind::Gdd { lambda, sizes } => (*lambda, sizes.clone(), None),
        DesignKind::Pbd { sizes } => (1, sizes.clone(), None),
        DesignKind::Igdd { lambda, hole } => (*lambda, vec![3], Some(hole.clone())),
        _ => {
            return VerificationReport::failing(
                vec![],
                d.blocks.total_multiplicity(),
                Violation::GroupingMismatch { reason: "kind is not GDD-like".into() },
            )
        }
    };
    if matches!(d.kind, DesignKind::Pbd { .. })
        && d.grouping.group_sizes().iter().any(|&s| s != 1)
    {
        return VerificationReport::failing(
            vec![],
            d.blocks.total_multiplicity(),
            Violation::GroupingMismatch { reason: "PBD requires singleton groups".into() },
        );
    }
    let (table, within) = match pair_frequencies_lenient(&d.blocks, &d.grouping) {
        Ok(x) => x,
        Err(e) => {
            return VerificationReport::failing(
                vec![],
                d.blocks.total_multiplicity(),
                Violation::GroupingMismatch { reason: e.to_string() },
            )
        }
    };
    let block_count = d.blocks.total_multiplicity();
    let observed = table.value_multiset();
    if let Some(v) = within {
        return VerificationReport::failing(observed, block_count, v);
    }
    if let Some(v) = check_sizes(d, &sizes) {
        return VerificationReport::failing(observed, block_count, v);
    }
    for (&(a, b), &f) in table.iter() {
        let expected = match &hole {
            Some(h) if h.is_hole_pair(a, b) => 0,
            _ => lambda,
        };
        if f != expected {
            let violation = if expected == 0 {
                Violation::HolePairCovered { pair: (a, b), found: f }
            } else {
                Violation::WrongFrequency { pair: (a, b), expected, found: f }
            };
            return VerificationReport::failing(observed, block_count, violation);
        }
    }
    VerificationReport::passing(observed, block_count)
}

/// TD(k,n): every block a transversal (one point per group), every cross
/// pair frequency exactly 1.
pub fn verify_td(d: &Design) -> VerificationReport {
    let k = match &d.kind {
        DesignKind::Td { k } => *k,
        _ => {
            return VerificationReport::failing(
                vec![],
                d.blocks.total_multiplicity(),
                Violation::GroupingMismatch { reason: "kind is not TD".into() },
            )
        }
    };
    let block_count = d.blocks.total_multiplicity();
    if d.grouping.num_groups() != k {
        return VerificationReport::failing(
            vec![],
            block_count,
            Violation::GroupingMismatch {
                reason: format!("{} groups, TD({k}) needs {k}", d.grouping.num_groups()),
            },
        );
    }
    for (b, _) in d.blocks.iter() {
        let mut per_group = vec![0usize; k];
        for p in b.points() {
            per_group[p.group as usize] += 1;
        }
        if b.len() != k {
            return VerificationReport::failing(
                vec![],
                block_count,
                Violation::DisallowedBlockSize { size: b.len() },
            );
        }
        if let Some((g, &c)) = per_group.iter().enumerate().find(|(_, &c)| c != 1) {
            return VerificationReport::failing(
                vec![],
                block_count,
                Violation::NonTransversalBlock { group: g, count: c },
            );
        }
    }
    let (table, within) = match pair_frequencies_lenient(&d.blocks, &d.grouping) {
        Ok(x) => x,
        Err(e) => {
            return VerificationReport::failing(
                vec![],
                block_count,
                Violation::GroupingMismatch { reason: e.to_string() },
            )
        }
    };
    let observed = table.value_multiset();
    if let Some(v) = within {
        return VerificationReport::failing(observed, block_count, v);
    }
    for (&(a, b), &f) in table.iter() {
        if f != 1 {
            return VerificationReport::failing(
                observed,
                block_count,
                Violation::WrongFrequency { pair: (a, b), expected: 1, found: f },
            );
        }
    }
    VerificationReport::passing(observed, block_count)
}

/// Each symbol exactly once per row and per column.
pub fn verify_latin(sq: &LatinSquare) -> Result<(), Violation> {
    let n = sq.order();
    for r in 0..n {
        let mut seen = vec![false; n];
        for c in 0..n {
            let s = sq.get(r, c);
            if s >= n || seen[s] {
                return Err(Violation::NotLatin { row: r, col: c });
            }
            seen[s] = true;
        }
    }
    for c in 0..n {
        let mut seen = vec![false; n];
        for r in 0..n {
            let s = sq.get(r, c);
            if seen[s] {
                return Err(Violation::NotLatin { row: r, col: c });
            }
            seen[s] = true;
        }
    }
    Ok(())
}

pub fn verify_idempotent_latin(sq: &LatinSquare) -> Result<(), Violation> {
    verify_latin(sq)?;
    for i in 0..sq.order() {
        if sq.get(i, i) != i {
            return Err(Violation::NotIdempotent { row: i });
        }
    }
    Ok(())
}

/// Superposition of each pair of squares must yield all n^2 ordered pairs.
pub fn verify_mols(squares: &[LatinSquare]) -> Result<(), Violation> {
    for sq in squares {
        verify_latin(sq)?;
    }
    let n = squares.first().map(|s| s.order()).unwrap_or(0);
    for i in 0..squares.len() {
        for j in i + 1..squares.len() {
            if squares[i].order() != n || squares[j].order() != n {
                return Err(Violation::OrthogonalityFailure { first: i, second: j });
            }
            let mut seen = vec![false; n * n];
            for r in 0..n {
                for c in 0..n {
                    let key = squares[i].get(r, c) * n + squares[j].get(r, c);
                    if seen[key] {
                        return Err(Violation::OrthogonalityFailure { first: i, second: j });
                    }
                    seen[key] = true;
                }
            }
        }
    }
    Ok(())
}

/// Dispatch on the design's claimed kind.
pub fn verify(d: &Design) -> VerificationReport {
    match &d.kind {
        DesignKind::Sbgdd { .. } | DesignKind::Sbts { .. } | DesignKind::SbCube => verify_sbgdd(d),
        DesignKind::Gdd { .. } | DesignKind::Pbd { .. } | DesignKind::Igdd { .. } => verify_gdd(d),
        DesignKind::Td { .. } => verify_td(d),
        DesignKind::IncompleteSbgdd { .. } => verify_incomplete_sbgdd(d),
    }
}
