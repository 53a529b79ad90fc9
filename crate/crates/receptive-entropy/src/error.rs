//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration at `{field}`: {message}")]
    InvalidConfig { field: String, message: String },

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("invalid regular system: {0}")]
    InvalidSystem(String),

    #[error("index {requested} exceeds the stored range n_max = {n_max}")]
    IndexOverflow { requested: usize, n_max: usize },

    #[error("enumeration budget exceeded: {what} needs {needed} states, budget is {budget}")]
    BudgetExceeded {
        what: String,
        needed: String,
        budget: u64,
    },

    #[error("truncation window too short: requires window end L >= {required}, have {have}")]
    DomainViolation { required: u32, have: u32 },

    #[error("epsilon {epsilon} sits on a dyadic metric value; separated/spanning counts are ambiguous there")]
    DyadicEpsilon { epsilon: f64 },

    #[error("epsilon {epsilon} outside the admissible range (0, 1)")]
    EpsilonRange { epsilon: f64 },

    #[error("weight function is not non-increasing in lambda (w({lambda_lo}) = {w_lo} < w({lambda_hi}) = {w_hi}); cover pool is inconsistent")]
    NonMonotoneWeight {
        lambda_lo: f64,
        w_lo: f64,
        lambda_hi: f64,
        w_hi: f64,
    },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("arithmetic overflow in lattice coordinates: {0}")]
    CoordOverflow(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status per the harness convention: 0 pass, 1 check
    /// failure, 2 configuration error, 3 budget exhaustion.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 3,
            Error::InvalidConfig { .. }
            | Error::InvalidMeasure(_)
            | Error::InvalidSystem(_)
            | Error::EpsilonRange { .. }
            | Error::DyadicEpsilon { .. } => 2,
            _ => 2,
        }
    }
}
