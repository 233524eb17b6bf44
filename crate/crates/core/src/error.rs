//! Error type shared by all solver stages.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix must have dimension >= 1")]
    EmptyMatrix,

    #[error("matrix storage has {got} entries, expected {n}x{n}")]
    ShapeMismatch { got: usize, n: usize },

    #[error("matrix entry ({i},{j}) is not finite")]
    NonFiniteEntry { i: usize, j: usize },

    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {delta:.3e} exceeds tolerance {tol:.3e}")]
    NotSymmetric {
        i: usize,
        j: usize,
        delta: f64,
        tol: f64,
    },

    #[error("vector has effectively zero norm")]
    ZeroVector,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("exact solver limited to {cap} variables, got {m}")]
    TooLarge { m: usize, cap: usize },

    #[error("variable index {index} out of range for {m} variables")]
    IndexOutOfRange { index: usize, m: usize },

    #[error("duplicate variable index {index} in subset")]
    DuplicateIndex { index: usize },

    #[error("no {side} bracket end found after {doublings} doublings; solver or encoding defect")]
    RangeNotFound { side: &'static str, doublings: usize },

    #[error("matrix is identically zero")]
    ZeroMatrix,

    #[error("vector is not unit-normalized: deviation {delta:.3e}")]
    NotNormalized { delta: f64 },

    #[error("jacobi diagonalization did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
