//! Lie algebras given by structure constants.

mod algebra;
pub mod standard;
mod subspace;
mod weights;

pub use algebra::{JacobiFailure, LieAlgebra, ValidationReport};
pub use subspace::Subspace;
pub use weights::{weight_decomposition, WeightDecomposition, WeightSpace};

use thiserror::Error;

use crate::exactla::{LinalgError, ScalarDomain};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("structure constant pair ({i}, {j}) must satisfy i < j")]
    NonCanonicalPair { i: usize, j: usize },
    #[error("structure constant pair ({i}, {j}) given twice")]
    DuplicatePair { i: usize, j: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("scalar domain mismatch: {0} vs {1}")]
    DomainMismatch(ScalarDomain, ScalarDomain),
    #[error("{0} labels supplied for dimension {1}")]
    LabelCount(usize, usize),
    #[error("the supplied Cartan subspace is not an abelian subalgebra")]
    NotAbelian,
    #[error("ad of Cartan element {0} is not diagonalizable over the field")]
    NotDiagonalizable(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
