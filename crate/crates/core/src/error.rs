use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has no rows")]
    Empty,

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("size mismatch: {left} vs {right} vertices")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid color matrix: {0}")]
    InvalidMatrix(String),

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("not a permutation of 0..{n}: {reason}")]
    NotPermutation { n: usize, reason: String },

    #[error(
        "coloring is not stable: arcs {first:?} and {second:?} of color {color} have different fingerprints"
    )]
    NotStable {
        color: u32,
        first: (usize, usize),
        second: (usize, usize),
    },

    #[error("n = {n} exceeds the configured limit of {limit} for this check")]
    TooLarge { n: usize, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
