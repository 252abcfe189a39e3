//! Exact scalar arithmetic and sparse exact linear algebra.
//!
//! Everything downstream reduces to kernels of large, very sparse systems
//! over `Q` or `F_p`. Elimination splits the column set into connected
//! components first, so independent blocks are reduced separately (and in
//! parallel); the assembled reduced row echelon form is the same as the
//! one produced by a single sequential pass.

mod rref;
mod scalar;
mod sparse;

pub use rref::{invert, kernel_basis, rank, rref, solve, Rref};
pub use scalar::{parse_scalar, Scalar, ScalarDomain, MAX_PRIME};
pub use sparse::{SparseMatrix, SparseVec};

pub(crate) use rref::{echelon_rows, kernel_from_echelon};
pub(crate) use sparse::Row;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("malformed scalar text {0:?}")]
    MalformedScalar(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("{text:?} is not reducible mod {modulus}")]
    NotReducible { text: String, modulus: u32 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is not below 2^31")]
    PrimeTooLarge(u64),
    #[error("scalar domain mismatch: {0} vs {1}")]
    DomainMismatch(ScalarDomain, ScalarDomain),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index ({row}, {col}) out of range")]
    IndexOutOfRange { row: usize, col: usize },
    #[error("duplicate entry at ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },
}
