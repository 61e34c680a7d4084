use num_bigint::BigInt;
use thiserror::Error;

use crate::sequences::Strategy;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),
    #[error("cofactor expansion is limited to 6x6, got {0}x{0}")]
    CofactorTooLarge(usize),
    #[error("strategy {strategy} is undefined at negative index {n}")]
    NegativeIndex { strategy: Strategy, n: i64 },
    #[error("generation mismatch: expected r = {expected}, got r = {found}")]
    GenerationMismatch { expected: u32, found: u32 },
    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("strategies disagree on F_{n}^({r})")]
    StrategyMismatch { r: u32, n: i64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
