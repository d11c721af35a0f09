//! Assembly of Sarvate-Beam GDDs of type g^u for any admissible starting
//! frequency: master-design inflation, transversal-design templates, tile
//! layouts, and the top-level dispatcher.

pub mod construct;
pub mod manifest;
pub mod tiles;

pub use construct::{construct, construct_with_manifest, td_template, Built};
pub use manifest::{Manifest, Piece};
pub use tiles::{assemble_tiles, inflate_gdd};

use sb_ingredients::IngredientError;
use sb_interleave::InterleaveError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AssembleError {
    /// The parameters admit no design at all.
    #[error("no design exists: {0}")]
    Nonexistent(String),
    /// A design exists (or might) but no implemented route reaches it.
    #[error("outside the implemented range: {0}")]
    OutsideRange(String),
    /// A route produced something that failed its own checks; a bug, not a
    /// statement about the parameters.
    #[error("construction defect: {0}")]
    Defect(String),
}

impl From<IngredientError> for AssembleError {
    fn from(e: IngredientError) -> Self {
        match e {
            IngredientError::Nonexistent(m) => AssembleError::Nonexistent(m),
            IngredientError::OutsideRange(m) => AssembleError::OutsideRange(m),
            IngredientError::Corrupt(m) => AssembleError::Defect(m),
        }
    }
}

impl From<InterleaveError> for AssembleError {
    // scheduling failures on admissible parameters mean the route picked a
    // master it cannot fill, which is a dispatcher bug
    fn from(e: InterleaveError) -> Self {
        AssembleError::Defect(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, AssembleError>;
