use thiserror::Error;

/// Errors raised by the code, graph, Hamiltonian and simulation layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} qubits, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("operator {0} anticommutes with a stabilizer generator and is not a logical operator")]
    NotALogical(String),

    #[error("unsupported interaction: term {0} has weight greater than two")]
    UnsupportedInteraction(String),

    #[error("unsupported Hamiltonian term {0}: only I, X_i, Z_i, X_iX_j and Z_iZ_j can be encoded")]
    UnsupportedTerm(String),

    #[error("invalid decoupling pulse: {0}")]
    InvalidPulse(String),

    #[error("code inconsistency: {0}")]
    CodeInconsistency(String),

    #[error("numerical check failed: {0}")]
    Numerical(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::Dimension { expected, actual })
    }
}
