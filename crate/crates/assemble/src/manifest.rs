//! Construction manifests: which strategy produced a design and from which
//! pieces. Replaying a manifest re-runs the (deterministic) construction,
//! so a manifest plus the parameters reproduces the design byte for byte.

use serde::{Deserialize, Serialize};

/// One ingredient placed during assembly: what it was and where its
/// frequency contribution starts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub name: String,
    pub start: u64,
    /// Master block the piece was laid onto, as point labels, when the
    /// strategy replaces blocks.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub block: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub strategy: String,
    pub g: usize,
    pub u: usize,
    pub mu: u64,
    /// Master design that was inflated or had its blocks replaced.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub master: Option<String>,
    /// Weight each master point was inflated by.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight: Option<usize>,
    pub pieces: Vec<Piece>,
}

impl Manifest {
    pub fn new(strategy: &str, g: usize, u: usize, mu: u64) -> Self {
        Manifest {
            strategy: strategy.into(),
            g,
            u,
            mu,
            master: None,
            weight: None,
            pieces: Vec::new(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("manifest serializes")
    }

    /// Re-run the construction the manifest records.
    pub fn replay(&self) -> crate::Result<sb_core::Design> {
        crate::construct(self.g, self.u, self.mu)
    }
}
