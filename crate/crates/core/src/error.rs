use thiserror::Error;

use crate::linalg::Ring;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid chain complex at degree {degree}: {reason}")]
    InvalidComplex { degree: i64, reason: String },

    #[error("invalid chain map at degree {degree}: {reason}")]
    InvalidMap { degree: i64, reason: String },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("vector is not a cycle of the presented subquotient")]
    NotACycle,

    #[error("Ext degree must be non-negative, got {0}")]
    NegativeDegree(i64),

    #[error("parse error at {location}: {reason}")]
    Parse { location: String, reason: String },

    #[error("unknown schema version {0:?}")]
    SchemaVersion(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
