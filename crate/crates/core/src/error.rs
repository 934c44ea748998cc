//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("Sylow subgroup search stalled for p = {p} (internal error)")]
    SylowSearchFailed { p: u64 },

    #[error("class function is not a linear character: {0}")]
    NotLinear(String),

    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },

    #[error("Galois exponent {k} is not coprime to the order {n}")]
    NotCoprime { k: i64, n: u64 },

    #[error("value is not a rational integer: {0}")]
    NotRationalInteger(String),

    #[error("eigenspace splitting failed over F_{p}")]
    SplitFailure { p: u64 },

    #[error("character lift inconsistent over F_{p}: {detail}")]
    LiftInconsistency { p: u64, detail: String },

    #[error("induced character value not divisible by the subgroup order")]
    NonIntegralInducedValue,

    #[error("no integer solution to the cyclic induction system")]
    NoIntegerSolution,

    #[error("Sylow witness unexpectedly integral: p = {p}, b = {b}, value = {value}")]
    WitnessUnexpectedlyIntegral { p: u64, b: u32, value: String },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unsupported group family: {0}")]
    UnsupportedFamily(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
