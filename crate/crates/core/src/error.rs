use thiserror::Error;

/// Errors raised by constructors, checkers and verifiers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph6 line {line}: {message}")]
    Graph6Line { line: usize, message: String },

    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("partition is not equitable: vertex {vertex} has {found} neighbours in cell {cell}, expected {expected}")]
    NotEquitable {
        vertex: usize,
        cell: usize,
        found: usize,
        expected: usize,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no unique perfect matching")]
    NoUniquePerfectMatching,

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
