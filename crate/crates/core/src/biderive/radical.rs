use super::{biderivation_space, BiderError, BiderMode, BiderSolutionSpace};
use crate::chevalley::AutomorphismMatrix;
use crate::exactla::{kernel_basis, SparseMatrix, SparseVec};
use crate::liecore::{LieAlgebra, Subspace};

/// Why basis vector `basis_index` is not in the radical:
/// `basis[solution](b_basis_index, b_partner) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalWitness {
    pub basis_index: usize,
    pub solution: usize,
    pub partner: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalResult {
    pub radical: Subspace,
    pub witnesses: Vec<RadicalWitness>,
    pub solutions: BiderSolutionSpace,
}

/// Common kernel of `x -> delta(x, b_j)` over all symmetric solutions and
/// all basis vectors `b_j`.
pub fn symmetric_radical(l: &LieAlgebra) -> Result<RadicalResult, BiderError> {
    let solutions = biderivation_space(l, BiderMode::Symmetric)?;
    Ok(radical_of(l, solutions))
}

fn radical_of(l: &LieAlgebra, solutions: BiderSolutionSpace) -> RadicalResult {
    let n = l.dim();
    let domain = l.domain();
    let mut rows: Vec<SparseVec> = Vec::new();
    let mut witnesses = Vec::new();
    let mut witnessed = vec![false; n];
    for (s, d) in solutions.basis.iter().enumerate() {
        for j in 0..n {
            // row k of the map x -> delta(x, b_j) has entry d_{ij}^k at column i
            let mut per_k: Vec<Vec<(usize, crate::exactla::Scalar)>> = vec![Vec::new(); n];
            for (i, seen) in witnessed.iter_mut().enumerate() {
                let v = d.value(i, j);
                if !v.is_zero() && !*seen {
                    *seen = true;
                    witnesses.push(RadicalWitness {
                        basis_index: i,
                        solution: s,
                        partner: j,
                    });
                }
                for (k, x) in v.entries() {
                    per_k[*k].push((i, x.clone()));
                }
            }
            for entries in per_k.into_iter().filter(|e| !e.is_empty()) {
                rows.push(SparseVec::from_entries(domain, n, entries).expect("in range"));
            }
        }
    }
    witnesses.sort_by_key(|w| w.basis_index);
    let stacked = SparseMatrix::from_rows(domain, n, &rows);
    let radical = Subspace::span(domain, n, &kernel_basis(&stacked));
    RadicalResult {
        radical,
        witnesses,
        solutions,
    }
}

/// Outcome of the structural checks on a radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub subalgebra: bool,
    /// Reported as data; not asserted in general.
    pub ideal: bool,
    /// One entry per supplied automorphism.
    pub stable: Vec<bool>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.subalgebra && self.stable.iter().all(|s| *s)
    }
}

pub fn radical_properties(l: &LieAlgebra, r: &RadicalResult, automorphisms: &[AutomorphismMatrix]) -> PropertyReport {
    PropertyReport {
        subalgebra: l.is_subalgebra(&r.radical),
        ideal: l.is_ideal(&r.radical),
        stable: automorphisms
            .iter()
            .map(|s| r.radical.contains_subspace(&r.radical.image(s.matrix())))
            .collect(),
    }
}
