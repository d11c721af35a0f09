//! Randomized and exhaustive search for triple systems with prescribed pair
//! frequencies.
//!
//! The workhorse pipeline: pick a frequency assignment satisfying the cheap
//! necessary conditions, build one (possibly negative) integer solution by
//! peeling vertices, then walk the integer kernel of the pair-triangle
//! incidence until every multiplicity is nonnegative. Small instances are
//! enumerated exhaustively instead, so infeasibility answers on them are
//! certificates.

pub mod anneal;
pub mod dlx;
pub mod enumerate;
pub mod exact;
pub mod exactsmall;
pub mod particular;
pub mod solver;
pub mod spec;
pub mod system;

pub use dlx::{Dlx, DlxResult};
pub use solver::{Budget, CubeInstance, CubeSolution};
pub use spec::{greedy_frequency_assignment, search_design, SearchOutcome, SearchSpec, Target};
pub use system::TriangleSystem;
