//! Error types shared across the engine.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum CoeffError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("binomial [{c} over {d}] requires d <= c")]
    BadBinomial { c: u32, d: u32 },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("denominator vanishes under specialization: factor {factor}")]
    VanishingDenominator { factor: String },
    #[error("invalid specialization: {0}")]
    BadSpecialization(String),
    #[error("mixed coefficient modes")]
    MixedModes,
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum EngineError {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(u8),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("reduction step budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("rule set validation failed: {0}")]
    Validation(String),
    #[error("degree {got} exceeds oracle bound {bound}")]
    DegreeTooLarge { got: usize, bound: usize },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Unsupported(String),
}
