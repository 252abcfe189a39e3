//! Classical simple Lie algebras in Chevalley bases, their root data, and
//! automorphisms of the form `exp(lambda ad x)` for nilpotent `ad x`.

mod automorphism;
mod frame;
mod roots;

pub use automorphism::{exp_ad_nilpotent, is_automorphism, vandermonde_extract, AutomorphismMatrix};
pub use frame::{classical_algebra, ChevalleyFrame};
pub use roots::{root_system, ClassicalType, RootDatum};

use thiserror::Error;

use crate::exactla::LinalgError;
use crate::liecore::LieError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChevalleyError {
    #[error("rank {rank} is out of range for type {type_letter}")]
    RankOutOfRange { type_letter: ClassicalType, rank: usize },
    #[error("characteristic {0} is excluded")]
    BadCharacteristic(u32),
    #[error("Killing form is degenerate over this field")]
    DegenerateKilling,
    #[error("ad x is not nilpotent")]
    NotNilpotent,
    #[error("{0}! is not invertible in characteristic {1}")]
    FactorialNotInvertible(usize, u32),
    #[error("matrix is not an automorphism")]
    NotAutomorphism,
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("sample parameter {0} is repeated")]
    RepeatedLambda(String),
    #[error("samples are not consistent with a polynomial of degree {0}")]
    InconsistentSamples(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
