use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::{BiderError, BiderMode, BiderTensor, DerivationMatrix};
use crate::chevalley::{is_automorphism, AutomorphismMatrix};
use crate::exactla::{echelon_rows, kernel_from_echelon, Row, Scalar, ScalarDomain, SparseMatrix, SparseVec};
use crate::liecore::{LieAlgebra, Subspace};

/// Column layout of the unknowns `d_{ij}^k` for a mode and window.
#[derive(Clone, Debug)]
pub(crate) struct Unknowns {
    pub mode: BiderMode,
    pub window: usize,
    pub dim: usize,
    pub pairs: Vec<(usize, usize)>,
    pair_index: Vec<Option<usize>>,
}

impl Unknowns {
    pub fn new(mode: BiderMode, window: usize, dim: usize) -> Self {
        let pairs = mode.pairs(window);
        let mut pair_index = vec![None; window * window];
        for (idx, (i, j)) in pairs.iter().enumerate() {
            pair_index[i * window + j] = Some(idx);
        }
        Unknowns {
            mode,
            window,
            dim,
            pairs,
            pair_index,
        }
    }

    pub fn n_cols(&self) -> usize {
        self.pairs.len() * self.dim
    }

    /// Column of `d_{ij}^k` and whether it enters with a minus sign.
    pub fn col(&self, i: usize, j: usize, k: usize) -> Option<(usize, bool)> {
        let (a, b, neg) = self.mode.canonical_pair(i, j)?;
        let p = self.pair_index[a * self.window + b]?;
        Some((p * self.dim + k, neg))
    }

    /// Pair `(i, j)` and output index `k` of a column.
    pub fn pair_of(&self, col: usize) -> ((usize, usize), usize) {
        (self.pairs[col / self.dim], col % self.dim)
    }

    /// Expand a kernel vector into a tensor.
    pub fn tensor(&self, domain: ScalarDomain, v: &SparseVec) -> BiderTensor {
        let mut t = BiderTensor::zero_windowed(domain, self.dim, self.window, self.mode);
        for (c, x) in v.entries() {
            let ((i, j), k) = self.pair_of(*c);
            t.set(i, j, k, x.clone());
            match self.mode {
                BiderMode::Full => {}
                BiderMode::Symmetric => t.set(j, i, k, x.clone()),
                BiderMode::Skew => t.set(j, i, k, -x),
            }
        }
        t
    }
}

fn push(rows: &mut BTreeMap<usize, Vec<(usize, Scalar)>>, m: usize, col: Option<(usize, bool)>, v: Scalar) {
    if let Some((c, neg)) = col {
        rows.entry(m).or_default().push((c, if neg { -&v } else { v }));
    }
}

fn in_window(v: &SparseVec, w: usize) -> bool {
    v.entries().last().is_none_or(|(i, _)| *i < w)
}

/// Scale so the leading entry is one.
fn monic(mut row: Row) -> Row {
    if let Some(inv) = row.first().and_then(|(_, v)| v.inv()) {
        if !inv.is_one() {
            for (_, v) in row.iter_mut() {
                *v = &*v * &inv;
            }
        }
    }
    row
}

fn finish(domain: ScalarDomain, n_cols: usize, rows: BTreeMap<usize, Vec<(usize, Scalar)>>) -> Vec<Row> {
    rows.into_values()
        .filter_map(|entries| {
            let v = SparseVec::from_entries(domain, n_cols, entries).expect("in range");
            (!v.is_zero()).then(|| monic(v.entries().to_vec()))
        })
        .collect()
}

/// Decides whether output coordinate `m` of an instance is imposed, given
/// the basis indices that appear as plain bracket arguments next to a
/// `delta` value in that instance.
pub(crate) type RowFilter<'a> = &'a (dyn Fn(usize, &[usize]) -> bool + Sync);

/// Constraint rows from both biderivation identities on all basis triples
/// whose arguments lie in the window, one row per output coordinate.
/// Rows are monic, deduplicated, and ordered by the triple they first
/// arise from.
pub(crate) fn constraint_rows(l: &LieAlgebra, u: &Unknowns, filter: RowFilter) -> Vec<Row> {
    let n = l.dim();
    let w = u.window;
    let domain = l.domain();
    let per_a: Vec<Vec<Row>> = (0..w)
        .into_par_iter()
        .map(|a| {
            let mut out = Vec::new();
            for b in 0..w {
                for c in 0..w {
                    // delta([a,b], c) = [a, delta(b,c)] - [b, delta(a,c)]
                    let ab = l.basis_bracket(a, b);
                    let idle = ab.is_zero() && l.partners(a).is_empty() && l.partners(b).is_empty();
                    if !idle && in_window(ab, w) {
                        let mut rows = BTreeMap::new();
                        for (p, cp) in ab.entries() {
                            for m in 0..n {
                                push(&mut rows, m, u.col(*p, c, m), cp.clone());
                            }
                        }
                        for &q in l.partners(a) {
                            for (m, v) in l.basis_bracket(a, q).entries() {
                                push(&mut rows, *m, u.col(b, c, q), -v);
                            }
                        }
                        for &q in l.partners(b) {
                            for (m, v) in l.basis_bracket(b, q).entries() {
                                push(&mut rows, *m, u.col(a, c, q), v.clone());
                            }
                        }
                        rows.retain(|m, _| filter(*m, &[a, b]));
                        out.extend(finish(domain, u.n_cols(), rows));
                    }
                    // delta(a, [b,c]) = [delta(a,b), c] + [b, delta(a,c)]
                    let bc = l.basis_bracket(b, c);
                    let idle = bc.is_zero() && l.partners(c).is_empty() && l.partners(b).is_empty();
                    if !idle && in_window(bc, w) {
                        let mut rows = BTreeMap::new();
                        for (p, cp) in bc.entries() {
                            for m in 0..n {
                                push(&mut rows, m, u.col(a, *p, m), cp.clone());
                            }
                        }
                        for &q in l.partners(c) {
                            for (m, v) in l.basis_bracket(q, c).entries() {
                                push(&mut rows, *m, u.col(a, b, q), -v);
                            }
                        }
                        for &q in l.partners(b) {
                            for (m, v) in l.basis_bracket(b, q).entries() {
                                push(&mut rows, *m, u.col(a, c, q), -v);
                            }
                        }
                        rows.retain(|m, _| filter(*m, &[c, b]));
                        out.extend(finish(domain, u.n_cols(), rows));
                    }
                }
            }
            out
        })
        .collect();
    let mut seen: HashSet<Row> = HashSet::new();
    let mut rows = Vec::new();
    for row in per_a.into_iter().flatten() {
        if seen.insert(row.clone()) {
            rows.push(row);
        }
    }
    rows
}

/// Scalar constraint matrix whose right kernel is the biderivation space
/// in the column layout of the mode.
pub fn biderivation_system(l: &LieAlgebra, mode: BiderMode) -> SparseMatrix {
    let u = Unknowns::new(mode, l.dim(), l.dim());
    SparseMatrix::from_raw_rows(l.domain(), u.n_cols(), constraint_rows(l, &u, &|_, _| true))
}

/// A canonical basis of biderivations of one mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiderSolutionSpace {
    pub fingerprint: String,
    pub mode: BiderMode,
    pub dim: usize,
    pub window: usize,
    pub basis: Vec<BiderTensor>,
    pub dim_solution: usize,
    pub warnings: Vec<String>,
}

impl BiderSolutionSpace {
    /// Build from arbitrary spanning tensors, reducing to canonical form.
    pub(crate) fn from_spanning(
        fingerprint: String,
        domain: ScalarDomain,
        dim: usize,
        window: usize,
        mode: BiderMode,
        tensors: &[BiderTensor],
    ) -> Self {
        let flat: Vec<SparseVec> = tensors.iter().map(BiderTensor::flatten).collect();
        let span = Subspace::span(domain, window * window * dim, &flat);
        let basis: Vec<BiderTensor> = span
            .basis_vectors()
            .iter()
            .map(|v| BiderTensor::unflatten(v, dim, window, mode))
            .collect();
        BiderSolutionSpace {
            fingerprint,
            mode,
            dim,
            window,
            dim_solution: basis.len(),
            basis,
            warnings: Vec::new(),
        }
    }

    pub fn span(&self, domain: ScalarDomain) -> Subspace {
        let flat: Vec<SparseVec> = self.basis.iter().map(BiderTensor::flatten).collect();
        Subspace::span(domain, self.window * self.window * self.dim, &flat)
    }

    /// Membership by reduction against the canonical basis.
    pub fn contains(&self, t: &BiderTensor) -> bool {
        t.dim() == self.dim && t.window() == self.window && self.span(t.domain()).contains(&t.flatten())
    }

    /// `sum_s params[s] * basis[s]`.
    pub fn combination(&self, domain: ScalarDomain, params: &[Scalar]) -> BiderTensor {
        let mut t = BiderTensor::zero_windowed(domain, self.dim, self.window, self.mode);
        for (b, s) in self.basis.iter().zip(params) {
            t = t.combine(b, s);
        }
        t
    }
}

pub(crate) fn check_mode(domain: ScalarDomain, mode: BiderMode) -> Result<Vec<String>, BiderError> {
    if domain.characteristic() == 2 {
        if mode != BiderMode::Full {
            return Err(BiderError::ModesCoincide);
        }
        return Ok(vec![
            "characteristic 2: symmetric and skew parts are not separated".into()
        ]);
    }
    Ok(Vec::new())
}

/// Solve a windowed system and return the canonical solution space.
pub(crate) fn solve_windowed(
    l: &LieAlgebra,
    window: usize,
    mode: BiderMode,
    filter: RowFilter,
) -> Result<(BiderSolutionSpace, Vec<Row>, Unknowns), BiderError> {
    let warnings = check_mode(l.domain(), mode)?;
    let u = Unknowns::new(mode, window, l.dim());
    let rows = constraint_rows(l, &u, filter);
    let ech = echelon_rows(u.n_cols(), rows.clone());
    let kernel = kernel_from_echelon(l.domain(), u.n_cols(), &ech);
    let tensors: Vec<BiderTensor> = kernel.iter().map(|v| u.tensor(l.domain(), v)).collect();
    let mut space = BiderSolutionSpace::from_spanning(l.fingerprint(), l.domain(), l.dim(), window, mode, &tensors);
    space.warnings = warnings;
    Ok((space, rows, u))
}

/// Canonical basis of the biderivations of `l` of the given mode.
pub fn biderivation_space(l: &LieAlgebra, mode: BiderMode) -> Result<BiderSolutionSpace, BiderError> {
    solve_windowed(l, l.dim(), mode, &|_, _| true).map(|(s, _, _)| s)
}

/// Both identities on every basis triple, evaluated through the bracket
/// and the bilinear extension of `d`. Triples whose arguments leave the
/// window of `d` are skipped.
pub fn is_biderivation(l: &LieAlgebra, d: &BiderTensor) -> bool {
    if d.dim() != l.dim() || d.domain() != l.domain() || !d.respects_mode() {
        return false;
    }
    let w = d.window();
    let b = |i: usize| l.basis_vector(i);
    for x in 0..w {
        for y in 0..w {
            for z in 0..w {
                let (bx, by, bz) = (b(x), b(y), b(z));
                let xy = l.basis_bracket(x, y);
                if in_window(xy, w) {
                    let lhs = d.apply(xy, &bz).expect("window");
                    let r1 = l.bracket(&bx, &d.apply(&by, &bz).expect("window")).expect("sized");
                    let r2 = l.bracket(&by, &d.apply(&bx, &bz).expect("window")).expect("sized");
                    if lhs != r1.sub(&r2) {
                        return false;
                    }
                }
                let yz = l.basis_bracket(y, z);
                if in_window(yz, w) {
                    let lhs = d.apply(&bx, yz).expect("window");
                    let r1 = l.bracket(&d.apply(&bx, &by).expect("window"), &bz).expect("sized");
                    let r2 = l.bracket(&by, &d.apply(&bx, &bz).expect("window")).expect("sized");
                    if lhs != r1.add(&r2) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn apply_biderivation(d: &BiderTensor, x: &SparseVec, y: &SparseVec) -> Result<SparseVec, BiderError> {
    d.apply(x, y)
}

/// `delta(x,[y,z]) + delta(y,[z,x]) + delta(z,[x,y])`.
pub fn cyclic_defect(
    l: &LieAlgebra,
    d: &BiderTensor,
    x: &SparseVec,
    y: &SparseVec,
    z: &SparseVec,
) -> Result<SparseVec, BiderError> {
    if d.mode() != BiderMode::Symmetric {
        return Err(BiderError::ModeMismatch {
            expected: BiderMode::Symmetric,
            got: d.mode(),
        });
    }
    let br = |a: &SparseVec, b: &SparseVec| l.bracket(a, b).map_err(BiderError::from);
    Ok(d.apply(x, &br(y, z)?)?
        .add(&d.apply(y, &br(z, x)?)?)
        .add(&d.apply(z, &br(x, y)?)?))
}

/// `delta_sigma(x, y) = sigma(delta(sigma^{-1} x, sigma^{-1} y))`.
pub fn twist(l: &LieAlgebra, d: &BiderTensor, sigma: &AutomorphismMatrix) -> Result<BiderTensor, BiderError> {
    if d.window() != d.dim() || d.dim() != l.dim() {
        return Err(BiderError::DimensionMismatch {
            expected: l.dim(),
            got: d.window(),
        });
    }
    if !is_automorphism(l, sigma.matrix()) {
        return Err(BiderError::NotAutomorphism);
    }
    let n = l.dim();
    let inv = sigma.inverse();
    let pre: Vec<SparseVec> = (0..n).map(|i| inv.apply(&l.basis_vector(i))).collect();
    let mut t = BiderTensor::zero(l.domain(), n, d.mode());
    for i in 0..n {
        for j in 0..n {
            let v = sigma.apply(&d.apply(&pre[i], &pre[j])?);
            for (k, x) in v.entries() {
                t.set(i, j, *k, x.clone());
            }
        }
    }
    Ok(t)
}

/// Twist every basis tensor and compare spans.
pub fn is_twist_stable(
    l: &LieAlgebra,
    space: &BiderSolutionSpace,
    sigma: &AutomorphismMatrix,
) -> Result<bool, BiderError> {
    let twisted = space
        .basis
        .iter()
        .map(|d| twist(l, d, sigma))
        .collect::<Result<Vec<_>, _>>()?;
    let other = BiderSolutionSpace::from_spanning(
        space.fingerprint.clone(),
        l.domain(),
        space.dim,
        space.window,
        space.mode,
        &twisted,
    );
    Ok(other.basis == space.basis)
}

/// Canonical basis of `Der(L)`. Matrices act on columns; the unknown for
/// entry `(k, i)` is the coefficient of `b_k` in `D b_i`.
pub fn derivation_space(l: &LieAlgebra) -> Vec<DerivationMatrix> {
    let n = l.dim();
    let domain = l.domain();
    let cols = n * n;
    let per_i: Vec<Vec<Row>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut out = Vec::new();
            for j in i + 1..n {
                // D[b_i, b_j] - [D b_i, b_j] - [b_i, D b_j] = 0
                let mut rows: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
                for (p, c) in l.basis_bracket(i, j).entries() {
                    for m in 0..n {
                        rows.entry(m).or_default().push((m * n + p, c.clone()));
                    }
                }
                for &k in l.partners(j) {
                    for (m, c) in l.basis_bracket(k, j).entries() {
                        rows.entry(*m).or_default().push((k * n + i, -c));
                    }
                }
                for &k in l.partners(i) {
                    for (m, c) in l.basis_bracket(i, k).entries() {
                        rows.entry(*m).or_default().push((k * n + j, -c));
                    }
                }
                out.extend(finish(domain, cols, rows));
            }
            out
        })
        .collect();
    let rows: Vec<Row> = per_i.into_iter().flatten().collect();
    let ech = echelon_rows(cols, rows);
    let kernel = kernel_from_echelon(domain, cols, &ech);
    Subspace::span(domain, cols, &kernel)
        .basis_vectors()
        .iter()
        .map(|v| DerivationMatrix {
            matrix: SparseMatrix::unflatten(v, n, n),
        })
        .collect()
}

/// Inner derivations as a subspace of flattened matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerDerivations {
    pub inner: Subspace,
    pub derivation_dim: usize,
    pub outer_dim: usize,
}

pub fn inner_derivations(l: &LieAlgebra) -> InnerDerivations {
    let n = l.dim();
    let ads: Vec<SparseVec> = (0..n)
        .map(|i| l.ad_matrix(&l.basis_vector(i)).expect("basis").flatten())
        .collect();
    let inner = Subspace::span(l.domain(), n * n, &ads);
    let derivation_dim = derivation_space(l).len();
    InnerDerivations {
        outer_dim: derivation_dim - inner.dim(),
        derivation_dim,
        inner,
    }
}

/// True iff `m` satisfies the Leibniz rule on all basis pairs.
pub fn is_derivation(l: &LieAlgebra, m: &SparseMatrix) -> bool {
    let n = l.dim();
    if m.n_rows() != n || m.n_cols() != n {
        return false;
    }
    let images = m.columns();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = m.mul_vec(l.basis_bracket(i, j));
            let rhs = l
                .bracket(&images[i], &l.basis_vector(j))
                .expect("sized")
                .add(&l.bracket(&l.basis_vector(i), &images[j]).expect("sized"));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
