//! Frequency-interval gadgets: the size-4 starting pattern, the size-5 run
//! and head arrangements for every residue of the starting frequency, and
//! lifting by constant-index GDDs.

pub mod five;
pub mod gadget4;

use sb_core::{Block, BlockMultiset, Design, DesignKind, PointId};
use thiserror::Error;

pub use five::{
    five_block_run, mu1_head, schedule_five, single_five, table2_run, FivePhase,
};
pub use gadget4::start_gadget_4;

#[derive(Debug, Error)]
pub enum InterleaveError {
    #[error("blocks do not match the required pattern: {0}")]
    PatternMismatch(String),
    #[error("starting frequency {mu} is incompatible: {reason}")]
    ResidueMismatch { mu: u64, reason: String },
    #[error("no arrangement of {count} size-5 blocks starts at {mu}")]
    Unschedulable { count: usize, mu: u64 },
    #[error("groupings do not match")]
    GroupingMismatch,
}

pub type Result<T> = std::result::Result<T, InterleaveError>;

/// Relabel a multiset whose points are (i, 0) onto the given points,
/// index i becoming pts[i].
pub fn relabel(ms: &BlockMultiset, pts: &[PointId]) -> BlockMultiset {
    let mut out = BlockMultiset::new();
    for (b, &m) in ms.iter() {
        out.add(
            Block::new(b.points().iter().map(|p| pts[p.group as usize]).collect()),
            m,
        );
    }
    out
}

/// Multiset union with `copies` copies of a lifter whose cross-pair
/// frequencies are constant; shifts an interval design's start by
/// lambda * copies.
pub fn lift_blocks(base: &mut BlockMultiset, lifter: &BlockMultiset, copies: u64) {
    base.extend_from(lifter, copies);
}

/// Lift a whole design by a GDD (or IGDD) of the same grouping; the start
/// of the frequency interval moves up by the lifter's index times `copies`.
pub fn lift(base: &Design, lifter: &Design, copies: u64) -> Result<Design> {
    if base.grouping != lifter.grouping {
        return Err(InterleaveError::GroupingMismatch);
    }
    let lambda = match &lifter.kind {
        DesignKind::Gdd { lambda, .. } | DesignKind::Igdd { lambda, .. } => *lambda,
        _ => {
            return Err(InterleaveError::PatternMismatch(
                "lifter must be a GDD or IGDD".into(),
            ))
        }
    };
    let mut blocks = base.blocks.clone();
    blocks.extend_from(&lifter.blocks, copies);
    let kind = match &base.kind {
        DesignKind::Sbgdd { mu } => DesignKind::Sbgdd {
            mu: mu + lambda * copies,
        },
        DesignKind::Sbts { mu } => DesignKind::Sbts {
            mu: mu + lambda * copies,
        },
        DesignKind::IncompleteSbgdd { mu, hole } => DesignKind::IncompleteSbgdd {
            mu: mu + lambda * copies,
            hole: hole.clone(),
        },
        other => other.clone(),
    };
    Ok(Design::new(base.grouping.clone(), blocks, kind))
}

/// One edge-set tile of a frequency schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tile {
    pub edges: u64,
}

/// Tile boundaries s_0 = mu, s_i = mu + sum of earlier tile edge counts;
/// tile i realizes the interval [s_i, s_{i+1} - 1].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencySchedule {
    pub mu: u64,
    pub boundaries: Vec<u64>,
}

impl FrequencySchedule {
    pub fn start(&self, i: usize) -> u64 {
        self.boundaries[i]
    }

    pub fn len(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.boundaries.len() <= 1
    }

    pub fn total_edges(&self) -> u64 {
        self.boundaries.last().unwrap() - self.mu
    }
}

/// Cumulative boundaries for an ordered tile list.
pub fn make_schedule(tiles: &[Tile], mu: u64) -> FrequencySchedule {
    let mut boundaries = Vec::with_capacity(tiles.len() + 1);
    let mut s = mu;
    boundaries.push(s);
    for t in tiles {
        s += t.edges;
        boundaries.push(s);
    }
    FrequencySchedule { mu, boundaries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sb_core::{verify, GroupedPointSet};
    use sb_ingredients::{latin_square, sb_cube};

    #[test]
    fn schedule_boundaries_abut() {
        let tiles = vec![Tile { edges: 12 }; 7];
        let s = make_schedule(&tiles, 0);
        assert_eq!(s.boundaries, vec![0, 12, 24, 36, 48, 60, 72, 84]);
        assert_eq!(s.total_edges(), 84);
    }

    #[test]
    fn lifting_shifts_start() {
        let cube = sb_cube(2).unwrap();
        let lifter = latin_square(2).to_design();
        let lifted = lift(&cube, &lifter, 12).unwrap();
        // the lifted design is an interval design starting at 12
        let d = Design::new(
            lifted.grouping.clone(),
            lifted.blocks.clone(),
            DesignKind::Sbgdd { mu: 12 },
        );
        assert!(verify(&d).pass);
    }

    #[test]
    fn grouping_mismatch_is_rejected() {
        let cube = sb_cube(2).unwrap();
        let lifter = latin_square(3).to_design();
        assert!(lift(&cube, &lifter, 1).is_err());
        let _ = GroupedPointSet::uniform(2, 3);
    }
}
