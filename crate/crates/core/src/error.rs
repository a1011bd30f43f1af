use thiserror::Error;

use crate::algebra::MAX_LEVEL;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("unsupported level {0} (levels 0..={MAX_LEVEL} are supported)")]
    UnsupportedLevel(u32),

    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("no alternative-entry element at level {level} after {attempts} attempts (seed {seed})")]
    Generation { level: u32, seed: u64, attempts: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("missing mesons: {}", .0.join(", "))]
    MissingMesons(Vec<String>),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for this error: 2 for bad input, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Consistency(_) | Error::NoConvergence { .. } | Error::Generation { .. } => 3,
            _ => 2,
        }
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
