use crate::exactla::{echelon_rows, Row, Scalar, ScalarDomain, SparseMatrix, SparseVec};

/// A linear subspace stored as the nonzero rows of its reduced row echelon
/// basis, so equal subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: SparseMatrix,
}

impl Subspace {
    pub fn span(domain: ScalarDomain, ambient_dim: usize, vectors: &[SparseVec]) -> Self {
        let rows: Vec<Row> = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.len(), ambient_dim, "vector length mismatch");
                v.entries().to_vec()
            })
            .collect();
        let rows = echelon_rows(ambient_dim, rows);
        Subspace {
            ambient_dim,
            basis: SparseMatrix::from_raw_rows(domain, ambient_dim, rows),
        }
    }

    pub fn zero(domain: ScalarDomain, ambient_dim: usize) -> Self {
        Self::span(domain, ambient_dim, &[])
    }

    pub fn full(domain: ScalarDomain, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: SparseMatrix::identity(domain, ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.n_rows()
    }

    pub fn domain(&self) -> ScalarDomain {
        self.basis.domain()
    }

    /// Basis rows in reduced echelon form.
    pub fn basis(&self) -> &SparseMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<SparseVec> {
        self.basis.rows()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim()).map(|r| self.basis.row_entries(r)[0].0).collect()
    }

    /// Coefficients of `v` on the basis rows, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots().iter().map(|&p| v.get(p)).collect();
        let mut residual = v.clone();
        for (r, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                residual = residual.sub_scaled(c, &self.basis.row(r));
            }
        }
        residual.is_zero().then_some(coords)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.basis_vectors();
        vecs.extend(other.basis_vectors());
        Subspace::span(self.domain(), self.ambient_dim, &vecs)
    }

    /// Image under a linear map given as a square matrix.
    pub fn image(&self, m: &SparseMatrix) -> Subspace {
        let vecs: Vec<SparseVec> = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.domain(), m.n_rows(), &vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: ScalarDomain = ScalarDomain::Rational;

    #[test]
    fn canonical_representation() {
        let a = Subspace::span(
            Q,
            3,
            &[SparseVec::from_i64s(Q, &[1, 1, 0]), SparseVec::from_i64s(Q, &[0, 2, 2])],
        );
        let b = Subspace::span(
            Q,
            3,
            &[
                SparseVec::from_i64s(Q, &[1, 0, -1]),
                SparseVec::from_i64s(Q, &[3, 3, 0]),
                SparseVec::from_i64s(Q, &[2, 1, -1]),
            ],
        );
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&SparseVec::from_i64s(Q, &[2, 3, 1])));
        assert!(!a.contains(&SparseVec::from_i64s(Q, &[0, 0, 1])));
        assert_eq!(
            a.coordinates(&SparseVec::from_i64s(Q, &[2, 3, 1])).unwrap(),
            vec![Scalar::from_i64(Q, 2), Scalar::from_i64(Q, 3)]
        );
    }
}
