//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Vectors or keys with different weights were mixed in a single-weight operation.
    #[error("mixed weights: {0}")]
    MixedWeight(String),

    /// Two subspaces over different ambient bases were combined.
    #[error("ambient bases do not match")]
    AmbientMismatch,

    /// A quotient was requested by a space that is not a subspace.
    #[error("not a subspace")]
    NotASubspace,

    /// A parity-dependent operation received a vector of mixed parity.
    #[error("vector is not parity-homogeneous")]
    NotHomogeneous,

    /// Operands live over different algebra shapes (m, n or variant).
    #[error("algebra shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A module descriptor violates its constraints.
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    /// A map coefficient has a vanishing denominator for the requested parameters.
    #[error("singular parameter: {0}")]
    SingularParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
