use thiserror::Error;

use crate::mpoly::MPoly;

#[derive(Debug, Clone, Error)]
pub enum AlgError {
    #[error("denominator vanishes identically after substitution")]
    DenominatorVanishes,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: MPoly },
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
}
