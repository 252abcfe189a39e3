//! Degree-truncated Witt algebras `W_n^+` and windowed biderivation problems.
//!
//! The truncation keeps the vector fields `t^alpha d_i` with `|alpha| <= N`.
//! Elements of degree above `N` do not span an ideal (`ad d_i` lowers degree),
//! so there is no quotient algebra. Instead a biderivation problem is posed on
//! a window of arguments of degree `<= N_in`, with values in the whole
//! truncation, and an identity instance contributes an output coordinate only
//! when every term feeding that coordinate is representable. Results describe
//! the window, not the infinite-dimensional algebra.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::biderive::{solve_windowed, BiderError, BiderMode, BiderSolutionSpace, BiderTensor, Unknowns};
use crate::chevalley::{vandermonde_extract, ChevalleyError};
use crate::exactla::{Scalar, ScalarDomain, SparseMatrix, SparseVec};
use crate::liecore::{weight_decomposition, LieAlgebra, LieError, Subspace, WeightDecomposition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WittError {
    #[error("Witt truncations need characteristic 0, got {0}")]
    BadCharacteristic(u32),
    #[error("at least one variable is required")]
    NoVariables,
    #[error("variable index {0} is out of range")]
    VariableOutOfRange(usize),
    #[error("inner cap {inner_cap} is incompatible with degree cap {deg_cap}")]
    CapsIncompatible { deg_cap: u32, inner_cap: u32 },
    #[error(transparent)]
    Bider(#[from] BiderError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
}

/// The vector field `t^alpha d_var` (variables numbered from 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub alpha: Vec<u32>,
    pub var: usize,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.alpha.iter().sum()
    }
}

/// Raw bracket of two monomial fields with integer coefficients, no cap.
fn raw_bracket(a: &Monomial, b: &Monomial) -> Vec<(Monomial, i64)> {
    // [t^a d_i, t^b d_j] = b_i t^{a+b-e_i} d_j - a_j t^{a+b-e_j} d_i
    let mut out: BTreeMap<Monomial, i64> = BTreeMap::new();
    let sum: Vec<u32> = a.alpha.iter().zip(&b.alpha).map(|(x, y)| x + y).collect();
    let (i, j) = (a.var, b.var);
    if b.alpha[i] > 0 {
        let mut g = sum.clone();
        g[i] -= 1;
        *out.entry(Monomial { alpha: g, var: j }).or_default() += b.alpha[i] as i64;
    }
    if a.alpha[j] > 0 {
        let mut g = sum;
        g[j] -= 1;
        *out.entry(Monomial { alpha: g, var: i }).or_default() -= a.alpha[j] as i64;
    }
    out.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn compositions(n: usize, total: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(n - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Monomial fields of degree at most `N`, graded: by degree, then by the
/// variable of the derivation, then lexicographically descending in `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittTruncation {
    n_vars: usize,
    deg_cap: u32,
    domain: ScalarDomain,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    algebra: LieAlgebra,
}

pub fn witt_truncation(n_vars: usize, deg_cap: u32, domain: ScalarDomain) -> Result<WittTruncation, WittError> {
    if domain.characteristic() != 0 {
        return Err(WittError::BadCharacteristic(domain.characteristic()));
    }
    if n_vars == 0 {
        return Err(WittError::NoVariables);
    }
    let mut basis = Vec::new();
    for deg in 0..=deg_cap {
        for var in 0..n_vars {
            for alpha in compositions(n_vars, deg) {
                basis.push(Monomial { alpha, var });
            }
        }
    }
    let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let dim = basis.len();
    let mut constants = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            let entries: Vec<(usize, Scalar)> = raw_bracket(&basis[a], &basis[b])
                .into_iter()
                .filter_map(|(m, c)| index.get(&m).map(|k| (*k, Scalar::from_i64(domain, c))))
                .collect();
            if !entries.is_empty() {
                constants.push((a, b, SparseVec::from_entries(domain, dim, entries).expect("in range")));
            }
        }
    }
    let labels = basis.iter().map(|m| label(n_vars, m)).collect();
    let algebra = LieAlgebra::new(domain, dim, Some(labels), constants)?;
    Ok(WittTruncation {
        n_vars,
        deg_cap,
        domain,
        basis,
        index,
        algebra,
    })
}

fn label(n_vars: usize, m: &Monomial) -> String {
    if n_vars == 1 {
        return format!("D[{}]", m.degree() as i64 - 1);
    }
    let mut parts: Vec<String> = Vec::new();
    for (k, e) in m.alpha.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("t{}", k + 1)),
            _ => parts.push(format!("t{}^{e}", k + 1)),
        }
    }
    parts.push(format!("d{}", m.var + 1));
    parts.join("*")
}

/// Result of a bracket in the truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TruncatedBracketResult {
    Value(SparseVec),
    /// Some monomial of the exact bracket has this degree, above the cap.
    Overflow {
        degree: u32,
    },
}

impl WittTruncation {
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn deg_cap(&self) -> u32 {
        self.deg_cap
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn degree(&self, idx: usize) -> u32 {
        self.basis[idx].degree()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// `d_var`.
    pub fn d(&self, var: usize) -> usize {
        self.index_of(&Monomial {
            alpha: vec![0; self.n_vars],
            var,
        })
        .expect("degree 0 is present")
    }

    /// For one variable, the basis index of `t^{i+1} d`.
    pub fn paper_index(&self, i: i64) -> Option<usize> {
        if self.n_vars != 1 || i < -1 {
            return None;
        }
        self.index_of(&Monomial {
            alpha: vec![(i + 1) as u32],
            var: 0,
        })
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.algebra.labels()[idx]
    }

    /// Bracket table with overflow dropped. Not a Lie algebra in general.
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// Number of basis elements of degree at most `cap` (a prefix of the basis).
    pub fn window_size(&self, cap: u32) -> usize {
        self.basis.iter().take_while(|m| m.degree() <= cap).count()
    }

    pub fn basis_vector(&self, idx: usize) -> SparseVec {
        SparseVec::unit(self.domain, self.dim(), idx)
    }
}

pub fn witt_bracket(w: &WittTruncation, a: &SparseVec, b: &SparseVec) -> TruncatedBracketResult {
    let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    for (i, x) in a.entries() {
        for (j, y) in b.entries() {
            for (m, c) in raw_bracket(&w.basis[*i], &w.basis[*j]) {
                let e = acc.entry(m).or_insert_with(|| Scalar::zero(w.domain));
                *e = &*e + &(&(x * y) * &Scalar::from_i64(w.domain, c));
            }
        }
    }
    let mut entries = Vec::new();
    let mut overflow = None;
    for (m, c) in acc {
        if c.is_zero() {
            continue;
        }
        match w.index_of(&m) {
            Some(k) => entries.push((k, c)),
            None => overflow = overflow.max(Some(m.degree())),
        }
    }
    match overflow {
        Some(degree) => TruncatedBracketResult::Overflow { degree },
        None => TruncatedBracketResult::Value(SparseVec::from_entries(w.domain, w.dim(), entries).expect("in range")),
    }
}

/// Weight spaces for the torus spanned by `t_k d_k`.
pub fn witt_weights(w: &WittTruncation) -> Result<WeightDecomposition, WittError> {
    let cartan: Vec<SparseVec> = (0..w.n_vars)
        .map(|k| {
            let mut alpha = vec![0; w.n_vars];
            alpha[k] = 1;
            w.basis_vector(w.index_of(&Monomial { alpha, var: k }).expect("present"))
        })
        .collect();
    if w.deg_cap == 0 {
        // no torus elements in the truncation
        return Ok(weight_decomposition(w.algebra(), &Subspace::zero(w.domain, w.dim()))?);
    }
    let cartan = Subspace::span(w.domain, w.dim(), &cartan);
    Ok(weight_decomposition(w.algebra(), &cartan)?)
}

/// `exp(lambda ad d_var)` on the truncation. `ad d_var` lowers degree, so the
/// sum is finite and no overflow occurs.
pub fn witt_exp_ad_d(w: &WittTruncation, var: usize, lambda: &Scalar) -> Result<SparseMatrix, WittError> {
    if var >= w.n_vars {
        return Err(WittError::VariableOutOfRange(var));
    }
    let ad = w.algebra.ad_matrix(&w.basis_vector(w.d(var)))?.scale(lambda);
    let n = w.dim();
    let mut sum = SparseMatrix::identity(w.domain, n);
    let mut term = SparseMatrix::identity(w.domain, n);
    let mut k = 1i64;
    loop {
        term = term
            .mul(&ad)
            .scale(&Scalar::from_i64(w.domain, k).inv().expect("characteristic 0"));
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        k += 1;
    }
    Ok(sum)
}

/// Polynomial components in `lambda` of `sigma_lambda(d(sigma_lambda^{-1} a, sigma_lambda^{-1} b))`
/// with `sigma_lambda = exp(lambda ad d_var)`, recovered from samples at
/// `lambda = 1, 2, ...`. Arguments must stay in the window of `d`, which
/// holds for windows closed under lowering degree.
pub fn witt_twist_components(
    w: &WittTruncation,
    d: &BiderTensor,
    var: usize,
    a: &SparseVec,
    b: &SparseVec,
) -> Result<Vec<SparseVec>, WittError> {
    let deg = |v: &SparseVec| v.entries().iter().map(|(i, _)| w.degree(*i)).max().unwrap_or(0) as usize;
    let bound = deg(a) + deg(b) + w.deg_cap as usize;
    let mut samples = Vec::new();
    for s in 1..=(bound as i64 + 2) {
        let lambda = Scalar::from_i64(w.domain, s);
        let fwd = witt_exp_ad_d(w, var, &lambda)?;
        let back = witt_exp_ad_d(w, var, &-&lambda)?;
        let v = fwd.mul_vec(&d.apply(&back.mul_vec(a), &back.mul_vec(b))?);
        samples.push((lambda, v));
    }
    Ok(vandermonde_extract(&samples, bound)?)
}

/// Which pairs of window elements a solved problem pins down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SupportSplit {
    /// Nonzero entries on interior pairs.
    pub interior: usize,
    /// Nonzero entries on the remaining window pairs.
    pub boundary: usize,
}

/// A windowed biderivation problem on a Witt truncation, solved.
#[derive(Clone, Debug)]
pub struct FilteredBiderProblem {
    pub n_vars: usize,
    pub deg_cap: u32,
    pub inner_cap: u32,
    pub mode: BiderMode,
    /// Number of window elements (degree `<= inner_cap`).
    pub window: usize,
    pub n_unknowns: usize,
    /// The imposed rows in the column layout of the mode.
    pub system: SparseMatrix,
    pub solutions: BiderSolutionSpace,
    /// `constrained[i * window + j]`: every component `d_{ij}^k` occurs in an
    /// imposed row.
    constrained: Vec<bool>,
    degrees: Vec<u32>,
    labels: Vec<String>,
    unknowns: Unknowns,
}

impl FilteredBiderProblem {
    /// Both arguments have degree `<= inner_cap - 1` and every component of
    /// the pair occurs in an imposed row.
    pub fn is_interior(&self, i: usize, j: usize) -> bool {
        self.inner_cap > 0
            && self.degrees[i] < self.inner_cap
            && self.degrees[j] < self.inner_cap
            && self.constrained[i * self.window + j]
    }

    pub fn support(&self) -> Vec<SupportSplit> {
        self.solutions
            .basis
            .iter()
            .map(|d| {
                let mut split = SupportSplit {
                    interior: 0,
                    boundary: 0,
                };
                for (i, j, _, _) in d.entries() {
                    if self.is_interior(i, j) {
                        split.interior += 1;
                    } else {
                        split.boundary += 1;
                    }
                }
                split
            })
            .collect()
    }

    /// True iff `d` satisfies every imposed row exactly.
    pub fn satisfies_system(&self, d: &BiderTensor) -> bool {
        if d.window() != self.window || d.dim() != self.unknowns.dim {
            return false;
        }
        let entries = self.unknowns.pairs.iter().enumerate().flat_map(|(p, (i, j))| {
            let dim = self.unknowns.dim;
            d.value(*i, *j)
                .entries()
                .iter()
                .map(move |(k, v)| (p * dim + k, v.clone()))
                .collect::<Vec<_>>()
        });
        let v = SparseVec::from_entries(d.domain(), self.n_unknowns, entries).expect("in range");
        self.system.mul_vec(&v).is_zero()
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.labels[idx]
    }
}

/// Windowed biderivation space with arguments of degree `<= inner_cap`.
pub fn truncated_biderivation_space(
    w: &WittTruncation,
    inner_cap: u32,
    mode: BiderMode,
) -> Result<FilteredBiderProblem, WittError> {
    let n_cap = w.deg_cap;
    if inner_cap > n_cap || 2 * inner_cap > n_cap + 1 {
        return Err(WittError::CapsIncompatible {
            deg_cap: n_cap,
            inner_cap,
        });
    }
    let window = w.window_size(inner_cap);
    let degrees: Vec<u32> = (0..w.dim()).map(|i| w.degree(i)).collect();
    // output degree g is fed by delta components of degree g + 1 - deg(x)
    // for each plain bracket argument x; all of them must be <= N,
    // i.e. deg(m) < N + min deg(x)
    let filter = |m: usize, args: &[usize]| {
        let low = args.iter().map(|a| degrees[*a]).min().unwrap_or(0);
        degrees[m] < n_cap + low
    };
    let (solutions, rows, unknowns) = solve_windowed(w.algebra(), window, mode, &filter)?;
    let mut seen = vec![false; unknowns.n_cols()];
    for row in &rows {
        for (c, _) in row {
            seen[*c] = true;
        }
    }
    let mut constrained = vec![false; window * window];
    for (p, chunk) in seen.chunks(w.dim()).enumerate() {
        if chunk.iter().all(|s| *s) {
            let (i, j) = unknowns.pairs[p];
            constrained[i * window + j] = true;
            constrained[j * window + i] = true;
        }
    }
    let n_unknowns = unknowns.n_cols();
    let system = SparseMatrix::from_rows(
        w.domain,
        n_unknowns,
        &rows
            .into_iter()
            .map(|r| SparseVec::from_entries(w.domain, n_unknowns, r).expect("in range"))
            .collect::<Vec<_>>(),
    );
    Ok(FilteredBiderProblem {
        n_vars: w.n_vars,
        deg_cap: n_cap,
        inner_cap,
        mode,
        window,
        n_unknowns,
        system,
        solutions,
        constrained,
        degrees,
        labels: w.algebra.labels().to_vec(),
        unknowns,
    })
}

/// The bracket restricted to the window, as a skew tensor.
pub fn restricted_inner(w: &WittTruncation, inner_cap: u32) -> BiderTensor {
    let window = w.window_size(inner_cap);
    let records = (0..window).flat_map(|i| {
        (0..window).flat_map(move |j| {
            w.algebra
                .basis_bracket(i, j)
                .entries()
                .iter()
                .map(move |(k, v)| (i, j, *k, v.clone()))
                .collect::<Vec<_>>()
        })
    });
    BiderTensor::from_entries(w.domain, w.dim(), window, BiderMode::Skew, records).expect("bracket is skew")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VanishingStatus {
    /// No interior partner.
    Unconstrained,
    /// Every solution vanishes on every interior partner.
    AllVanish,
    /// Interior partners on which some solution is nonzero.
    NonVanishing(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorRow {
    pub index: usize,
    pub label: String,
    pub degree: u32,
    /// Interior partners `j` of this element.
    pub partners: Vec<usize>,
    pub status: VanishingStatus,
}

/// One row per window element: do all solutions vanish on `(x, b_j)` for
/// the interior partners `b_j`?
pub fn generator_vanishing_report(p: &FilteredBiderProblem) -> Vec<GeneratorRow> {
    (0..p.window)
        .map(|i| {
            let partners: Vec<usize> = (0..p.window).filter(|&j| p.is_interior(i, j)).collect();
            let bad: Vec<usize> = partners
                .iter()
                .copied()
                .filter(|&j| p.solutions.basis.iter().any(|d| !d.value(i, j).is_zero()))
                .collect();
            let status = if partners.is_empty() {
                VanishingStatus::Unconstrained
            } else if bad.is_empty() {
                VanishingStatus::AllVanish
            } else {
                VanishingStatus::NonVanishing(bad)
            };
            GeneratorRow {
                index: i,
                label: p.labels[i].clone(),
                degree: p.degrees[i],
                partners,
                status,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests;
