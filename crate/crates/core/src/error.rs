use thiserror::Error;

/// Errors surfaced by the library. Numerical contract violations
/// (insufficient cutoff, failed root bracketing) are kept separate from
/// plain argument errors so the CLI can map them to distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{function} has a pole at s = {s}")]
    Pole { function: &'static str, s: f64 },

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error(
        "insufficient cutoff: tail estimate {tail:.3e} exceeds budget {budget:.3e} \
         (suggested cutoff: {suggested})"
    )]
    InsufficientCutoff {
        tail: f64,
        budget: f64,
        suggested: u64,
    },

    #[error("solver failure: {0}")]
    Solver(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
