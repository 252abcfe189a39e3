use std::fmt;

use super::{LinalgError, Scalar, ScalarDomain};

/// A sparse row: strictly increasing column indices, no explicit zeros.
pub(crate) type Row = Vec<(usize, Scalar)>;

/// `target - s * pivot` on sorted sparse rows.
pub(crate) fn axpy_row(target: &[(usize, Scalar)], s: &Scalar, pivot: &[(usize, Scalar)]) -> Row {
    if s.is_zero() {
        return target.to_vec();
    }
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < target.len() || b < pivot.len() {
        let ca = target.get(a).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = pivot.get(b).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(target[a].clone());
            a += 1;
        } else if cb < ca {
            out.push((cb, -&(s * &pivot[b].1)));
            b += 1;
        } else {
            let v = &target[a].1 - &(s * &pivot[b].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

fn normalize_entries(mut entries: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
    entries.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = &last.1 + &v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// Sparse vector over one scalar domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec {
    len: usize,
    domain: ScalarDomain,
    entries: Row,
}

impl SparseVec {
    pub fn zero(domain: ScalarDomain, len: usize) -> Self {
        SparseVec {
            len,
            domain,
            entries: Vec::new(),
        }
    }

    pub fn unit(domain: ScalarDomain, len: usize, index: usize) -> Self {
        assert!(index < len, "unit index {index} out of range {len}");
        SparseVec {
            len,
            domain,
            entries: vec![(index, Scalar::one(domain))],
        }
    }

    /// Build from (index, value) pairs; repeated indices are summed and
    /// zeros dropped.
    pub fn from_entries(
        domain: ScalarDomain,
        len: usize,
        entries: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Result<Self, LinalgError> {
        let entries: Vec<_> = entries.into_iter().collect();
        for (i, v) in &entries {
            if *i >= len {
                return Err(LinalgError::IndexOutOfRange { row: 0, col: *i });
            }
            if v.domain() != domain {
                return Err(LinalgError::DomainMismatch(domain, v.domain()));
            }
        }
        Ok(SparseVec {
            len,
            domain,
            entries: normalize_entries(entries),
        })
    }

    pub fn from_dense(domain: ScalarDomain, values: &[Scalar]) -> Result<Self, LinalgError> {
        Self::from_entries(domain, values.len(), values.iter().cloned().enumerate())
    }

    pub fn from_i64s(domain: ScalarDomain, values: &[i64]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(i, v)| (i, Scalar::from_i64(domain, *v)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        SparseVec {
            len: values.len(),
            domain,
            entries,
        }
    }

    pub(crate) fn from_row(domain: ScalarDomain, len: usize, entries: Row) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|e| !e.1.is_zero() && e.0 < len));
        SparseVec { len, domain, entries }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Scalar {
        match self.entries.binary_search_by_key(&index, |e| e.0) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(self.domain),
        }
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.domain); self.len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.sub_scaled(&Scalar::from_i64(self.domain, -1), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.sub_scaled(&Scalar::one(self.domain), other)
    }

    /// `self - s * other`.
    pub fn sub_scaled(&self, s: &Scalar, other: &SparseVec) -> SparseVec {
        assert_eq!(self.len, other.len, "vector length mismatch");
        SparseVec {
            len: self.len,
            domain: self.domain,
            entries: axpy_row(&self.entries, s, &other.entries),
        }
    }

    pub fn scale(&self, s: &Scalar) -> SparseVec {
        if s.is_zero() {
            return SparseVec::zero(self.domain, self.len);
        }
        SparseVec {
            len: self.len,
            domain: self.domain,
            entries: self.entries.iter().map(|(i, v)| (*i, v * s)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            len: self.len,
            domain: self.domain,
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero(self.domain);
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (ia, va) = &self.entries[a];
            let (ib, vb) = &other.entries[b];
            if ia < ib {
                a += 1;
            } else if ib < ia {
                b += 1;
            } else {
                acc = &acc + &(va * vb);
                a += 1;
                b += 1;
            }
        }
        acc
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, v) in self.to_dense().iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Sparse row-major matrix with sorted column indices per row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    n_rows: usize,
    n_cols: usize,
    domain: ScalarDomain,
    rows: Vec<Row>,
}

impl SparseMatrix {
    pub fn zero(domain: ScalarDomain, n_rows: usize, n_cols: usize) -> Self {
        SparseMatrix {
            n_rows,
            n_cols,
            domain,
            rows: vec![Vec::new(); n_rows],
        }
    }

    pub fn identity(domain: ScalarDomain, n: usize) -> Self {
        SparseMatrix {
            n_rows: n,
            n_cols: n,
            domain,
            rows: (0..n).map(|i| vec![(i, Scalar::one(domain))]).collect(),
        }
    }

    /// Build from `(row, col, value)` triples. Zero values are dropped;
    /// a repeated position is an error.
    pub fn from_triplets(
        domain: ScalarDomain,
        n_rows: usize,
        n_cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self, LinalgError> {
        let mut rows: Vec<Row> = vec![Vec::new(); n_rows];
        for (r, c, v) in triplets {
            if r >= n_rows || c >= n_cols {
                return Err(LinalgError::IndexOutOfRange { row: r, col: c });
            }
            if v.domain() != domain {
                return Err(LinalgError::DomainMismatch(domain, v.domain()));
            }
            rows[r].push((c, v));
        }
        for (r, row) in rows.iter_mut().enumerate() {
            row.sort_by_key(|e| e.0);
            if let Some(w) = row.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(LinalgError::DuplicateEntry { row: r, col: w[0].0 });
            }
            row.retain(|e| !e.1.is_zero());
        }
        Ok(SparseMatrix {
            n_rows,
            n_cols,
            domain,
            rows,
        })
    }

    pub fn from_i64_rows(domain: ScalarDomain, rows: &[Vec<i64>]) -> Self {
        let n_cols = rows.first().map_or(0, |r| r.len());
        let vecs: Vec<SparseVec> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), n_cols, "ragged rows");
                SparseVec::from_i64s(domain, r)
            })
            .collect();
        Self::from_rows(domain, n_cols, &vecs)
    }

    /// Stack vectors as rows.
    pub fn from_rows(domain: ScalarDomain, n_cols: usize, rows: &[SparseVec]) -> Self {
        SparseMatrix {
            n_rows: rows.len(),
            n_cols,
            domain,
            rows: rows
                .iter()
                .map(|v| {
                    assert_eq!(v.len(), n_cols, "row length mismatch");
                    v.entries().to_vec()
                })
                .collect(),
        }
    }

    /// Place vectors as columns.
    pub fn from_columns(domain: ScalarDomain, n_rows: usize, cols: &[SparseVec]) -> Self {
        Self::from_rows(domain, n_rows, cols).transpose()
    }

    pub(crate) fn from_raw_rows(domain: ScalarDomain, n_cols: usize, rows: Vec<Row>) -> Self {
        debug_assert!(rows.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)));
        SparseMatrix {
            n_rows: rows.len(),
            n_cols,
            domain,
            rows,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn row_entries(&self, r: usize) -> &[(usize, Scalar)] {
        &self.rows[r]
    }

    pub(crate) fn raw_rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> SparseVec {
        SparseVec::from_row(self.domain, self.n_cols, self.rows[r].clone())
    }

    pub fn rows(&self) -> Vec<SparseVec> {
        (0..self.n_rows).map(|r| self.row(r)).collect()
    }

    pub fn column(&self, c: usize) -> SparseVec {
        let entries = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                row.binary_search_by_key(&c, |e| e.0)
                    .ok()
                    .map(|p| (r, row[p].1.clone()))
            })
            .collect();
        SparseVec::from_row(self.domain, self.n_rows, entries)
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().rows()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.rows[r].binary_search_by_key(&c, |e| e.0) {
            Ok(p) => self.rows[r][p].1.clone(),
            Err(_) => Scalar::zero(self.domain),
        }
    }

    /// All stored entries in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows: Vec<Row> = vec![Vec::new(); self.n_cols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rows[*c].push((r, v.clone()));
            }
        }
        SparseMatrix {
            n_rows: self.n_cols,
            n_cols: self.n_rows,
            domain: self.domain,
            rows,
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(self.n_cols, v.len(), "matrix-vector dimension mismatch");
        let entries = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                let s = SparseVec::from_row(self.domain, self.n_cols, row.clone()).dot(v);
                (!s.is_zero()).then_some((r, s))
            })
            .collect();
        SparseVec::from_row(self.domain, self.n_rows, entries)
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.n_cols, other.n_rows, "matrix product dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: Row = Vec::new();
                for (k, a) in row {
                    acc = axpy_row(&acc, &-a, &other.rows[*k]);
                }
                acc
            })
            .collect();
        SparseMatrix {
            n_rows: self.n_rows,
            n_cols: other.n_cols,
            domain: self.domain,
            rows,
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.n_rows, self.n_cols), (other.n_rows, other.n_cols));
        let minus_one = Scalar::from_i64(self.domain, -1);
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| axpy_row(a, &minus_one, b))
            .collect();
        SparseMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            domain: self.domain,
            rows,
        }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add(&other.scale(&Scalar::from_i64(self.domain, -1)))
    }

    pub fn scale(&self, s: &Scalar) -> SparseMatrix {
        let rows = if s.is_zero() {
            vec![Vec::new(); self.n_rows]
        } else {
            self.rows
                .iter()
                .map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect())
                .collect()
        };
        SparseMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            domain: self.domain,
            rows,
        }
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero(self.domain);
        for r in 0..self.n_rows.min(self.n_cols) {
            acc = &acc + &self.get(r, r);
        }
        acc
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.n_cols, other.n_cols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        SparseMatrix {
            n_rows: self.n_rows + other.n_rows,
            n_cols: self.n_cols,
            domain: self.domain,
            rows,
        }
    }

    /// Flatten row-major into a vector of length `n_rows * n_cols`.
    pub fn flatten(&self) -> SparseVec {
        let entries = self
            .triplets()
            .map(|(r, c, v)| (r * self.n_cols + c, v.clone()))
            .collect();
        SparseVec::from_row(self.domain, self.n_rows * self.n_cols, entries)
    }

    /// Inverse of [`SparseMatrix::flatten`].
    pub fn unflatten(v: &SparseVec, n_rows: usize, n_cols: usize) -> SparseMatrix {
        assert_eq!(v.len(), n_rows * n_cols);
        let mut rows: Vec<Row> = vec![Vec::new(); n_rows];
        for (i, s) in v.entries() {
            rows[i / n_cols].push((i % n_cols, s.clone()));
        }
        SparseMatrix {
            n_rows,
            n_cols,
            domain: v.domain(),
            rows,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        (0..self.n_rows).map(|r| self.row(r).to_dense()).collect()
    }
}

impl fmt::Display for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.n_rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.row(r))?;
        }
        write!(f, "]")
    }
}
