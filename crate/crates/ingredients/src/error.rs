use thiserror::Error;

/// Why an ingredient could not be produced. `Nonexistent` is a definitive
/// answer (known impossibility or certified search exhaustion);
/// `OutsideRange` means the object may exist but no implemented strategy
/// reaches it; `Corrupt` means pinned catalog data failed verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IngredientError {
    #[error("nonexistent: {0}")]
    Nonexistent(String),
    #[error("outside implemented range: {0}")]
    OutsideRange(String),
    #[error("catalog corruption: {0}")]
    Corrupt(String),
}

pub type Result<T> = std::result::Result<T, IngredientError>;
