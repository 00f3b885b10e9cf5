//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
///
/// The CLI maps variants to process exit codes: parameter/domain/contract
/// errors exit with 2, solver and convergence failures with 3.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented range.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A mathematical function was evaluated outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A caller-asserted precondition does not hold.
    #[error("contract error: {0}")]
    Contract(String),

    /// The input graph lacks the structure an operation requires
    /// (e.g. a non-tree ball or an empty sphere).
    #[error("structure error: {0}")]
    Structure(String),

    /// Problem size exceeds a hard guard (e.g. dense solves above n = 4000).
    #[error("capacity error: {0}")]
    Capacity(String),

    /// An iterative solver failed to reach the requested tolerance.
    #[error("convergence error: {msg} (best residual {residual:.3e})")]
    Convergence { msg: String, residual: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short machine-parseable tag, printed on stderr by the CLI.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Parameter(_) => "param",
            Error::Domain(_) => "domain",
            Error::Contract(_) => "contract",
            Error::Structure(_) => "structure",
            Error::Capacity(_) => "capacity",
            Error::Convergence { .. } => "convergence",
            Error::Io(_) => "io",
            Error::Serde(_) => "serde",
        }
    }

    /// Process exit code used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Convergence { .. } => 3,
            _ => 2,
        }
    }
}
