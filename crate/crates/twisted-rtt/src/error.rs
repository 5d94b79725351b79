//! Error values shared across the crate.
//!
//! Every failure mode of an exact computation is a distinct variant so that
//! callers (and reports) can tell a genuine singularity from a bad request.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at sample point {point}")]
    PoleAtSamplePoint { point: String },
    #[error("non-removable pole at {at}")]
    NonRemovablePole { at: String },
    #[error("grid evaluation kept hitting poles after {retries} shifted grids")]
    GridRetriesExhausted { retries: usize },
    #[error("singular complement while inverting block {index}")]
    SingularComplement { index: String },
    #[error("expansion pole: {what}")]
    ExpansionPole { what: String },
    #[error("odd mode {mode} requested at node {node}")]
    OddMode { node: usize, mode: i64 },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
