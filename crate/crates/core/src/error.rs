use thiserror::Error;

use crate::perm::Permutation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("size mismatch: expected a partition of {expected}, got one of {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("resource budget exceeded: {what} needs more than {limit} steps")]
    BudgetExceeded { what: String, limit: u64 },

    #[error("vector is not central: {first} has coefficient {first_value} but conjugate {second} has {second_value}")]
    NotCentral {
        first: Permutation,
        first_value: String,
        second: Permutation,
        second_value: String,
    },

    #[error("unitary dimension {dim} is smaller than the degree {degree}")]
    DimensionTooSmall { degree: usize, dim: u64 },

    #[error("internal error: {0}")]
    Internal(String),
}
