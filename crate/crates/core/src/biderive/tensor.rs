use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::BiderError;
use crate::exactla::{Scalar, ScalarDomain, SparseMatrix, SparseVec};

/// Symmetry class of the bilinear maps being solved for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BiderMode {
    Full,
    Symmetric,
    Skew,
}

impl BiderMode {
    pub fn as_str(self) -> &'static str {
        match self {
            BiderMode::Full => "full",
            BiderMode::Symmetric => "symmetric",
            BiderMode::Skew => "skew",
        }
    }

    /// Whether the ordered pair `(i, j)` is a stored unknown, and the sign
    /// relating `d_{ij}` to the stored one.
    pub(crate) fn canonical_pair(self, i: usize, j: usize) -> Option<(usize, usize, bool)> {
        match self {
            BiderMode::Full => Some((i, j, false)),
            BiderMode::Symmetric => Some((i.min(j), i.max(j), false)),
            BiderMode::Skew if i == j => None,
            BiderMode::Skew => Some((i.min(j), i.max(j), i > j)),
        }
    }

    /// Stored pairs over a window of size `w`, in lexicographic order.
    pub(crate) fn pairs(self, w: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..w {
            let lo = match self {
                BiderMode::Full => 0,
                BiderMode::Symmetric => i,
                BiderMode::Skew => i + 1,
            };
            for j in lo..w {
                out.push((i, j));
            }
        }
        out
    }
}

impl fmt::Display for BiderMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BiderMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(BiderMode::Full),
            "symmetric" | "sym" => Ok(BiderMode::Symmetric),
            "skew" => Ok(BiderMode::Skew),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

/// A bilinear map `delta(b_i, b_j) = sum_k d_{ij}^k b_k`.
///
/// Arguments range over the first `window` basis vectors (all of them for
/// an ordinary algebra) and values over all `dim` coordinates. Entries are
/// stored for every ordered pair, so symmetric and skew tensors carry both
/// `(i, j)` and `(j, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiderTensor {
    dim: usize,
    window: usize,
    domain: ScalarDomain,
    mode: BiderMode,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl BiderTensor {
    pub fn zero(domain: ScalarDomain, dim: usize, mode: BiderMode) -> Self {
        Self::zero_windowed(domain, dim, dim, mode)
    }

    pub fn zero_windowed(domain: ScalarDomain, dim: usize, window: usize, mode: BiderMode) -> Self {
        assert!(window <= dim);
        BiderTensor {
            dim,
            window,
            domain,
            mode,
            entries: BTreeMap::new(),
        }
    }

    /// Build from `(i, j, k, value)` records. Records for both orders of a
    /// pair must agree with the mode; missing mirror entries are filled in.
    pub fn from_entries(
        domain: ScalarDomain,
        dim: usize,
        window: usize,
        mode: BiderMode,
        records: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self, BiderError> {
        let mut t = Self::zero_windowed(domain, dim, window, mode);
        for (i, j, k, v) in records {
            if i >= window || j >= window || k >= dim {
                return Err(BiderError::IndexOutOfRange { i, j, k });
            }
            if v.domain() != domain {
                return Err(BiderError::DomainMismatch);
            }
            if v.is_zero() {
                continue;
            }
            let mirror = match mode {
                BiderMode::Full => None,
                BiderMode::Symmetric => Some(v.clone()),
                BiderMode::Skew if i == j => return Err(BiderError::ModeViolation { i, j, k }),
                BiderMode::Skew => Some(-&v),
            };
            if t.entries.get(&(i, j, k)).is_some_and(|old| *old != v) {
                return Err(BiderError::ModeViolation { i, j, k });
            }
            t.entries.insert((i, j, k), v);
            if let Some(m) = mirror {
                if let Some(old) = t.entries.get(&(j, i, k)) {
                    if *old != m {
                        return Err(BiderError::ModeViolation { i, j, k });
                    }
                }
                t.entries.insert((j, i, k), m);
            }
        }
        Ok(t)
    }

    /// The bracket itself as a skew tensor.
    pub fn inner(l: &crate::liecore::LieAlgebra) -> Self {
        let mut t = Self::zero(l.domain(), l.dim(), BiderMode::Skew);
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                for (k, v) in l.basis_bracket(i, j).entries() {
                    t.entries.insert((i, j, *k), v.clone());
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn mode(&self) -> BiderMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in `(i, j, k)` lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.entries.iter().map(|((i, j, k), v)| (*i, *j, *k, v))
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.entries
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.domain))
    }

    /// `delta(b_i, b_j)`.
    pub fn value(&self, i: usize, j: usize) -> SparseVec {
        let entries = self
            .entries
            .range((i, j, 0)..(i, j + 1, 0))
            .map(|((_, _, k), v)| (*k, v.clone()));
        SparseVec::from_entries(self.domain, self.dim, entries).expect("in range")
    }

    /// Bilinear extension. Both arguments must be supported in the window.
    pub fn apply(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec, BiderError> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(BiderError::DimensionMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
            if v.entries().last().is_some_and(|(i, _)| *i >= self.window) {
                return Err(BiderError::OutsideWindow);
            }
        }
        let mut out = SparseVec::zero(self.domain, self.dim);
        for (i, a) in x.entries() {
            for (j, b) in y.entries() {
                let v = self.value(*i, *j);
                if !v.is_zero() {
                    out = out.sub_scaled(&-&(a * b), &v);
                }
            }
        }
        Ok(out)
    }

    /// Length of the flattened coordinate vector.
    pub fn flat_len(&self) -> usize {
        self.window * self.window * self.dim
    }

    /// Coordinates in `(i, j, k)` lexicographic order.
    pub fn flatten(&self) -> SparseVec {
        let (w, n) = (self.window, self.dim);
        SparseVec::from_entries(
            self.domain,
            self.flat_len(),
            self.entries
                .iter()
                .map(|((i, j, k), v)| ((i * w + j) * n + k, v.clone())),
        )
        .expect("in range")
    }

    pub fn unflatten(v: &SparseVec, dim: usize, window: usize, mode: BiderMode) -> Self {
        assert_eq!(v.len(), window * window * dim);
        let mut t = Self::zero_windowed(v.domain(), dim, window, mode);
        for (c, x) in v.entries() {
            let (ij, k) = (c / dim, c % dim);
            t.entries.insert((ij / window, ij % window, k), x.clone());
        }
        t
    }

    /// True iff the stored entries respect the declared mode.
    pub fn respects_mode(&self) -> bool {
        self.entries.iter().all(|((i, j, k), v)| match self.mode {
            BiderMode::Full => true,
            BiderMode::Symmetric => self.get(*j, *i, *k) == *v,
            BiderMode::Skew => i != j && self.get(*j, *i, *k) == -v,
        })
    }

    pub fn add(&self, other: &BiderTensor) -> BiderTensor {
        self.combine(other, &Scalar::one(self.domain))
    }

    pub fn scale(&self, s: &Scalar) -> BiderTensor {
        let mut t = self.clone();
        t.entries = self
            .entries
            .iter()
            .map(|(k, v)| (*k, v * s))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        t
    }

    /// `self + s * other`.
    pub(crate) fn combine(&self, other: &BiderTensor, s: &Scalar) -> BiderTensor {
        let mut t = self.clone();
        for (key, v) in &other.entries {
            let sum = &t.get(key.0, key.1, key.2) + &(s * v);
            if sum.is_zero() {
                t.entries.remove(key);
            } else {
                t.entries.insert(*key, sum);
            }
        }
        t
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        if v.is_zero() {
            self.entries.remove(&(i, j, k));
        } else {
            self.entries.insert((i, j, k), v);
        }
    }
}

/// A linear map `D` with `D[x, y] = [Dx, y] + [x, Dy]`, acting on
/// coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DerivationMatrix {
    pub matrix: SparseMatrix,
}
