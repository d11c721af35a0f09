//! Domain types, frequency computation, and verifiers for Sarvate-Beam
//! group divisible designs (block size three) and the ingredient design
//! classes used to build them: GDDs, transversal designs, latin squares and
//! MOLS, pairwise balanced designs, and incomplete variants.
//!
//! An SBGDD_mu of type g^u is a triple multiset on u groups of g points in
//! which within-group pairs never appear and the cross-group pair
//! frequencies are exactly the consecutive integers mu..mu+L-1, where
//! L = g^2 * u(u-1)/2 is the number of cross pairs.

pub mod admissible;
pub mod format;
pub mod freq;
pub mod types;
pub mod verify;

pub use admissible::{admissible, interval_for, sbts_admissible, Admissibility, NonexistenceReason};
pub use freq::pair_frequencies;
pub use types::{
    Block, BlockMultiset, Design, DesignKind, FrequencyInterval, FrequencyTable, GroupedPointSet,
    HoleSpec, LatinSquare, PointId,
};
pub use verify::{
    verify, verify_gdd, verify_incomplete_sbgdd, verify_latin, verify_mols, verify_sbgdd,
    verify_td, StructuralError, VerificationReport, Violation,
};
