use exactalg::AlgError;
use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, Error)]
pub enum JackError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("weight mismatch: |{0}| != |{1}|")]
    WeightMismatch(Partition, Partition),
    #[error("row {row} is not a valid box move for {lambda}")]
    InvalidMove { lambda: Partition, row: usize },
    #[error("{mu} is not contained in {lambda}")]
    NotContained { lambda: Partition, mu: Partition },
    #[error("weight {weight} exceeds the configured maximum {max}")]
    WeightLimitExceeded { weight: usize, max: usize },
    #[error("{0} has parts equal to 1")]
    MuHasOnes(Partition),
    #[error("|{mu}| exceeds |{lambda}|")]
    MuTooHeavy { lambda: Partition, mu: Partition },
    #[error("|{rho}| exceeds |{lambda}|")]
    RhoTooHeavy { lambda: Partition, rho: Partition },
    #[error("interpolated polynomial disagrees off the grid at {point}")]
    DegreeBoundViolated { point: String },
    #[error("expected a polynomial, found a proper rational function: {0}")]
    NotPolynomial(String),
    #[error("unsupported request: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

pub type Result<T> = std::result::Result<T, JackError>;
