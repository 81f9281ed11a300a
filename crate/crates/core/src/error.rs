use thiserror::Error;

/// Errors shared by all library modules.
#[derive(Debug, Error)]
pub enum CoreError {
    /// Input failed a structural or numerical precondition (non-Hermitian
    /// matrix, trace != 1, negative eigenvalue, bad parameter range, ...).
    #[error("validation: {0}")]
    Validation(String),

    /// The operation is well defined but outside the classical reduction this
    /// library implements (e.g. a Gibbs-preserving stochastic map applied to a
    /// state with coherences in the declared energy eigenbasis).
    #[error("scope: {0}")]
    Scope(String),

    /// A protocol step violates the active Hamiltonian-family restriction.
    #[error("constraint: step {step}: {reason}")]
    Constraint { step: usize, reason: String },

    /// The requested family/state combination has no implemented evaluation
    /// strategy.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;

impl CoreError {
    pub fn validation(msg: impl Into<String>) -> Self {
        CoreError::Validation(msg.into())
    }

    pub fn scope(msg: impl Into<String>) -> Self {
        CoreError::Scope(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        CoreError::Unsupported(msg.into())
    }
}
