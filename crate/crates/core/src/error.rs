use alloc::string::String;

use crate::lattice::Family;

/// Errors raised by constructors, enumerators and verifiers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("weight family mismatch: {left:?} vs {right:?}")]
    FamilyMismatch { left: Family, right: Family },

    #[error("folding needs an A-family weight of odd rank 2n-1, got rank {0}")]
    EvenRank(usize),

    #[error("weight is outside P' (omega_n coefficient {0} is odd)")]
    NotInPPrime(i64),

    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: i64, min: i64, max: i64 },

    #[error("rank {0} is too small")]
    RankTooSmall(usize),

    #[error("point ({i},{k}) violates the parity rule: {rule}")]
    Parity { i: i64, k: i64, rule: &'static str },

    #[error("points ({i0},{k0}) and ({i1},{k1}) are not in snake position")]
    NotSnakePosition { i0: i64, k0: i64, i1: i64, k1: i64 },

    #[error("a snake needs at least one point")]
    EmptySnake,

    #[error("paths have incompatible shapes")]
    IncompatiblePaths,

    #[error("invalid path: {0}")]
    InvalidPath(&'static str),

    #[error("point ({x},{y}) is not in the image of tau")]
    NotInTauImage { x: i64, y: i64 },

    #[error("path has gap {0}, expected 0")]
    NonzeroGap(u64),

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("enumeration would produce {count} tuples, above the limit of {limit}")]
    LimitExceeded { count: u128, limit: u64 },
}

pub type Result<T> = core::result::Result<T, Error>;
