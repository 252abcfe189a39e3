//! Derivations, biderivations, the symmetric biderivation radical and
//! commutative post-Lie products.
//!
//! Biderivation spaces are computed as the kernel of one linear system whose
//! unknowns are the coefficients `d_{ij}^k` of `delta(b_i, b_j)`, reduced by
//! symmetry class before elimination. Every solution space is returned in a
//! canonical basis (reduced echelon form of the flattened tensors), so two
//! runs over the same algebra produce identical output.

mod postlie;
mod radical;
mod system;
mod tensor;

pub use postlie::{is_postlie, postlie_classify, PostLieReport, PostLieVerdict, QuadraticPoly, ENUMERATION_LIMIT};
pub use radical::{radical_properties, symmetric_radical, PropertyReport, RadicalResult, RadicalWitness};
pub use system::{
    apply_biderivation, biderivation_space, biderivation_system, cyclic_defect, derivation_space, inner_derivations,
    is_biderivation, is_derivation, is_twist_stable, twist, BiderSolutionSpace, InnerDerivations,
};
pub use tensor::{BiderMode, BiderTensor, DerivationMatrix};

pub(crate) use system::{solve_windowed, Unknowns};

use thiserror::Error;

use crate::exactla::{Scalar, SparseVec};
use crate::liecore::{LieAlgebra, LieError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BiderError {
    #[error("symmetric and skew modes coincide in characteristic 2")]
    ModesCoincide,
    #[error("expected a {expected} tensor, got {got}")]
    ModeMismatch { expected: BiderMode, got: BiderMode },
    #[error("entry ({i},{j},{k}) violates the tensor mode")]
    ModeViolation { i: usize, j: usize, k: usize },
    #[error("entry ({i},{j},{k}) is out of range")]
    IndexOutOfRange { i: usize, j: usize, k: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("argument lies outside the tensor window")]
    OutsideWindow,
    #[error("domain mismatch")]
    DomainMismatch,
    #[error("matrix is not an automorphism")]
    NotAutomorphism,
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Which forms of the coroot identity hold for one symmetric tensor and one
/// `sl_2`-triple `(e, h = [e, f], f)` with `alpha(h) = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorootCheck {
    /// `delta(h, x) = -2 alpha(x) delta(e, f)` for every `x` in the Cartan basis.
    pub stated: bool,
    /// The same with `+2`.
    pub flipped: bool,
    /// `delta(h, h) = -4 delta(e, f)`.
    pub squared: bool,
}

/// Evaluate the coroot identities for `d` on the root vectors `e`, `f`.
/// Returns `None` if some Cartan basis vector does not act on `e` by a scalar.
pub fn coroot_identities(
    l: &LieAlgebra,
    d: &BiderTensor,
    e: &SparseVec,
    f: &SparseVec,
    cartan_basis: &[SparseVec],
) -> Option<CorootCheck> {
    let domain = l.domain();
    let h = l.bracket(e, f).ok()?;
    let def = d.apply(e, f).ok()?;
    let two = Scalar::from_i64(domain, 2);
    let (mut stated, mut flipped) = (true, true);
    for x in cartan_basis {
        let xe = l.bracket(x, e).ok()?;
        let (lead, c) = e.entries().first()?;
        let alpha = xe.get(*lead).checked_div(c)?;
        if xe != e.scale(&alpha) {
            return None;
        }
        let lhs = d.apply(&h, x).ok()?;
        let rhs = def.scale(&(&two * &alpha));
        stated &= lhs == rhs.neg();
        flipped &= lhs == rhs;
    }
    let squared = d.apply(&h, &h).ok()? == def.scale(&Scalar::from_i64(domain, -4));
    Some(CorootCheck {
        stated,
        flipped,
        squared,
    })
}

#[cfg(test)]
mod tests;
