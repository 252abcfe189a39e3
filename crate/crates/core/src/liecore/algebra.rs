use std::collections::BTreeMap;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use super::{LieError, Subspace};
use crate::exactla::{kernel_basis, rank, Scalar, ScalarDomain, SparseMatrix, SparseVec};

/// A finite-dimensional Lie algebra over an exact field, given by the
/// brackets `[b_i, b_j] = sum_k c_ij^k b_k` for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    domain: ScalarDomain,
    labels: Vec<String>,
    /// `[b_i, b_j]` for all ordered pairs, index `i * dim + j`.
    table: Vec<SparseVec>,
    /// For each `i`, the `j` with `[b_i, b_j] != 0`.
    partners: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub defect: SparseVec,
}

/// Result of [`LieAlgebra::validate`]: every basis triple whose Jacobi sum
/// does not vanish.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<JacobiFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl LieAlgebra {
    /// Build from `(i, j, [b_i, b_j])` with `i < j`. Pairs not listed
    /// bracket to zero. The Jacobi identity is not checked here; see
    /// [`LieAlgebra::validate`].
    pub fn new(
        domain: ScalarDomain,
        dim: usize,
        labels: Option<Vec<String>>,
        constants: impl IntoIterator<Item = (usize, usize, SparseVec)>,
    ) -> Result<Self, LieError> {
        let labels = match labels {
            Some(l) if l.len() != dim => return Err(LieError::LabelCount(l.len(), dim)),
            Some(l) => l,
            None => (0..dim).map(|i| format!("b{i}")).collect(),
        };
        let mut table = vec![SparseVec::zero(domain, dim); dim * dim];
        let mut seen = vec![false; dim * dim];
        for (i, j, v) in constants {
            if i >= j {
                return Err(LieError::NonCanonicalPair { i, j });
            }
            if j >= dim {
                return Err(LieError::IndexOutOfRange { index: j, dim });
            }
            if v.len() != dim {
                return Err(LieError::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
            if v.domain() != domain {
                return Err(LieError::DomainMismatch(domain, v.domain()));
            }
            if seen[i * dim + j] {
                return Err(LieError::DuplicatePair { i, j });
            }
            seen[i * dim + j] = true;
            table[j * dim + i] = v.neg();
            table[i * dim + j] = v;
        }
        let partners = (0..dim)
            .map(|i| (0..dim).filter(|&j| !table[i * dim + j].is_zero()).collect())
            .collect();
        Ok(LieAlgebra {
            dim,
            domain,
            labels,
            table,
            partners,
        })
    }

    /// Build from a bracket function evaluated on `i < j`.
    pub fn from_fn(
        domain: ScalarDomain,
        dim: usize,
        labels: Option<Vec<String>>,
        mut bracket: impl FnMut(usize, usize) -> SparseVec,
    ) -> Result<Self, LieError> {
        let mut constants = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let v = bracket(i, j);
                if !v.is_zero() {
                    constants.push((i, j, v));
                }
            }
        }
        Self::new(domain, dim, labels, constants)
    }

    /// Abelian algebra of dimension `n`.
    pub fn abelian(domain: ScalarDomain, n: usize) -> Self {
        Self::new(domain, n, None, Vec::new()).expect("abelian algebra")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `[b_i, b_j]` for any ordered pair.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    /// Indices `j` with `[b_i, b_j] != 0`.
    pub fn partners(&self, i: usize) -> &[usize] {
        &self.partners[i]
    }

    /// Nonzero constants `(i, j, [b_i, b_j])` with `i < j`, lexicographic.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> + '_ {
        (0..self.dim).flat_map(move |i| {
            self.partners[i]
                .iter()
                .filter(move |&&j| j > i)
                .map(move |&j| (i, j, self.basis_bracket(i, j)))
        })
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec {
        SparseVec::unit(self.domain, self.dim, i)
    }

    pub fn is_abelian(&self) -> bool {
        self.partners.iter().all(Vec::is_empty)
    }

    fn check_vec(&self, v: &SparseVec) -> Result<(), LieError> {
        if v.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        if v.domain() != self.domain {
            return Err(LieError::DomainMismatch(self.domain, v.domain()));
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec, LieError> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, xi) in x.entries() {
            for (j, yj) in y.entries() {
                let c = self.basis_bracket(*i, *j);
                if c.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, ck) in c.entries() {
                    let term = &s * ck;
                    acc.entry(*k).and_modify(|a| *a = &*a + &term).or_insert(term);
                }
            }
        }
        let entries: Vec<_> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        SparseVec::from_entries(self.domain, self.dim, entries).expect("in range")
    }

    /// `[x, b_j]`.
    pub(crate) fn bracket_with_basis(&self, x: &SparseVec, j: usize) -> SparseVec {
        self.bracket_unchecked(x, &self.basis_vector(j))
    }

    /// Every basis triple `i < j < k` with nonzero Jacobi sum.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut failures = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let t1 = self.bracket_with_basis(self.basis_bracket(i, j), k);
                    let t2 = self.bracket_with_basis(self.basis_bracket(j, k), i);
                    let t3 = self.bracket_with_basis(self.basis_bracket(k, i), j);
                    let defect = t1.add(&t2).add(&t3);
                    if !defect.is_zero() {
                        failures.push(JacobiFailure {
                            triple: (i, j, k),
                            defect,
                        });
                    }
                }
            }
        }
        ValidationReport { failures }
    }

    /// Matrix of `ad x`: column `j` is `[x, b_j]`.
    pub fn ad_matrix(&self, x: &SparseVec) -> Result<SparseMatrix, LieError> {
        self.check_vec(x)?;
        let cols: Vec<SparseVec> = (0..self.dim).map(|j| self.bracket_with_basis(x, j)).collect();
        Ok(SparseMatrix::from_columns(self.domain, self.dim, &cols))
    }

    /// Killing form `trace(ad b_i ad b_j)` and whether it is nondegenerate.
    pub fn killing_form(&self) -> (SparseMatrix, bool) {
        let n = self.dim;
        let mut triplets = Vec::new();
        for i in 0..n {
            for j in 0..n {
                // sum over l, k of c_il^k c_jk^l
                let mut acc = Scalar::zero(self.domain);
                for &l in &self.partners[i] {
                    for (k, c) in self.basis_bracket(i, l).entries() {
                        let back = self.basis_bracket(j, *k).get(l);
                        if !back.is_zero() {
                            acc = &acc + &(c * &back);
                        }
                    }
                }
                if !acc.is_zero() {
                    triplets.push((i, j, acc));
                }
            }
        }
        let m = SparseMatrix::from_triplets(self.domain, n, n, triplets).expect("in range");
        let nondegenerate = rank(&m) == n;
        (m, nondegenerate)
    }

    /// `[L, L]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let vecs: Vec<SparseVec> = self.constants().map(|(_, _, v)| v.clone()).collect();
        Subspace::span(self.domain, self.dim, &vecs)
    }

    /// `{x : [x, L] = 0}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // row (j, k), column i: c_ij^k
        let mut triplets = Vec::new();
        for i in 0..n {
            for &j in &self.partners[i] {
                for (k, c) in self.basis_bracket(i, j).entries() {
                    triplets.push((j * n + k, i, c.clone()));
                }
            }
        }
        let m = SparseMatrix::from_triplets(self.domain, n * n, n, triplets).expect("in range");
        Subspace::span(self.domain, n, &kernel_basis(&m))
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().dim() == self.dim
    }

    pub fn is_centerless(&self) -> bool {
        self.center().dim() == 0
    }

    /// Block direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra, LieError> {
        if self.domain != other.domain {
            return Err(LieError::DomainMismatch(self.domain, other.domain));
        }
        let (n1, n) = (self.dim, self.dim + other.dim);
        let shift = |v: &SparseVec, by: usize| {
            SparseVec::from_entries(self.domain, n, v.entries().iter().map(|(k, c)| (k + by, c.clone())))
                .expect("in range")
        };
        let mut constants: Vec<(usize, usize, SparseVec)> =
            self.constants().map(|(i, j, v)| (i, j, shift(v, 0))).collect();
        constants.extend(other.constants().map(|(i, j, v)| (i + n1, j + n1, shift(v, n1))));
        let labels = self.labels.iter().chain(&other.labels).cloned().collect();
        LieAlgebra::new(self.domain, n, Some(labels), constants)
    }

    /// Permutation matrix swapping the two summands of `L ⊕ L`.
    pub fn swap_summands(domain: ScalarDomain, block: usize) -> SparseMatrix {
        let n = 2 * block;
        let triplets = (0..n).map(|i| ((i + block) % n, i, Scalar::one(domain)));
        SparseMatrix::from_triplets(domain, n, n, triplets).expect("permutation")
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        for (a, u) in basis.iter().enumerate() {
            for v in &basis[a + 1..] {
                if !s.contains(&self.bracket_unchecked(u, v)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.basis_vectors()
            .iter()
            .all(|u| (0..self.dim).all(|j| s.contains(&self.bracket_with_basis(u, j))))
    }

    /// SHA-256 over the canonical text of the field, dimension and
    /// structure constants (labels excluded).
    pub fn fingerprint(&self) -> String {
        let mut text = format!("{};{}", self.domain, self.dim);
        for (i, j, v) in self.constants() {
            write!(text, ";{i},{j}:").unwrap();
            for (k, c) in v.entries() {
                write!(text, "{k}={c},").unwrap();
            }
        }
        let digest = Sha256::digest(text.as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}
