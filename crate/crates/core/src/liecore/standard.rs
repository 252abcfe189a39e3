//! Small named algebras used as controls.

use super::LieAlgebra;
use crate::exactla::{ScalarDomain, SparseVec};

fn labels(names: &[&str]) -> Option<Vec<String>> {
    Some(names.iter().map(|s| s.to_string()).collect())
}

/// `sl_2` in the basis `(e, h, f)`.
pub fn sl2(domain: ScalarDomain) -> LieAlgebra {
    let v = |x: &[i64]| SparseVec::from_i64s(domain, x);
    LieAlgebra::new(
        domain,
        3,
        labels(&["e", "h", "f"]),
        vec![(0, 1, v(&[-2, 0, 0])), (0, 2, v(&[0, 1, 0])), (1, 2, v(&[0, 0, -2]))],
    )
    .expect("sl2")
}

/// Heisenberg algebra `[x, y] = z`.
pub fn heisenberg(domain: ScalarDomain) -> LieAlgebra {
    LieAlgebra::new(
        domain,
        3,
        labels(&["x", "y", "z"]),
        vec![(0, 1, SparseVec::from_i64s(domain, &[0, 0, 1]))],
    )
    .expect("heisenberg")
}

/// Two-dimensional non-abelian algebra `[x, y] = x`.
pub fn aff1(domain: ScalarDomain) -> LieAlgebra {
    LieAlgebra::new(
        domain,
        2,
        labels(&["x", "y"]),
        vec![(0, 1, SparseVec::from_i64s(domain, &[1, 0]))],
    )
    .expect("aff1")
}
