use std::collections::BTreeMap;

use rayon::prelude::*;

use super::sparse::{axpy_row, Row};
use super::{Scalar, ScalarDomain, SparseMatrix, SparseVec};

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// Same shape as the input; nonzero rows first, zero rows at the bottom.
    pub matrix: SparseMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Blocks smaller than this are reduced on the calling thread.
const PAR_BLOCK_THRESHOLD: usize = 64;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Row-reduce `rows` (each sorted, zero-free) and return the nonzero rows
/// of the reduced row echelon form, ordered by pivot column.
///
/// Columns are partitioned into the connected components of the
/// row/column incidence graph; each block is eliminated independently.
/// The result does not depend on the partition or on thread count since
/// the reduced echelon form is unique.
pub(crate) fn echelon_rows(n_cols: usize, rows: Vec<Row>) -> Vec<Row> {
    let rows: Vec<Row> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let mut uf = UnionFind::new(n_cols);
    for row in &rows {
        let first = row[0].0;
        for (c, _) in &row[1..] {
            uf.union(first, *c);
        }
    }
    let mut blocks: BTreeMap<usize, Vec<Row>> = BTreeMap::new();
    for row in rows {
        let root = uf.find(row[0].0);
        blocks.entry(root).or_default().push(row);
    }
    let blocks: Vec<Vec<Row>> = blocks.into_values().collect();
    let reduced: Vec<Vec<Row>> =
        if blocks.len() > 1 && blocks.iter().map(Vec::len).sum::<usize>() >= PAR_BLOCK_THRESHOLD {
            blocks.into_par_iter().map(reduce_block).collect()
        } else {
            blocks.into_iter().map(reduce_block).collect()
        };
    let mut out: Vec<Row> = reduced.into_iter().flatten().collect();
    out.sort_by_key(|r| r[0].0);
    out
}

fn reduce_block(rows: Vec<Row>) -> Vec<Row> {
    // Forward pass: each incoming row is reduced on its leading entry
    // until it either vanishes or opens a new pivot (stored monic).
    let mut pivots: BTreeMap<usize, Row> = BTreeMap::new();
    for mut r in rows {
        while let Some((lead, val)) = r.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => r = axpy_row(&r, &val, p),
                None => {
                    let inv = val.inv().expect("nonzero leading entry");
                    for e in r.iter_mut() {
                        e.1 = &e.1 * &inv;
                    }
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    // Back substitution, highest pivot first.
    let mut done: BTreeMap<usize, Row> = BTreeMap::new();
    while let Some((lead, mut r)) = pivots.pop_last() {
        let mut idx = 1;
        while idx < r.len() {
            let c = r[idx].0;
            match done.get(&c) {
                Some(p) => {
                    let v = r[idx].1.clone();
                    r = axpy_row(&r, &v, p);
                }
                None => idx += 1,
            }
        }
        done.insert(lead, r);
    }
    done.into_values().collect()
}

/// Reduced row echelon form, pivot columns and rank.
pub fn rref(m: &SparseMatrix) -> Rref {
    let rows = echelon_rows(m.n_cols(), m.raw_rows().to_vec());
    let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
    let rank = rows.len();
    let mut all = rows;
    all.resize(m.n_rows().max(rank), Vec::new());
    Rref {
        matrix: SparseMatrix::from_raw_rows(m.domain(), m.n_cols(), all),
        pivots,
        rank,
    }
}

pub fn rank(m: &SparseMatrix) -> usize {
    echelon_rows(m.n_cols(), m.raw_rows().to_vec()).len()
}

/// Basis of the right null space, one vector per free column in increasing
/// order; the free coordinate is 1 and the other free coordinates are 0.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    let rows = echelon_rows(m.n_cols(), m.raw_rows().to_vec());
    kernel_from_echelon(m.domain(), m.n_cols(), &rows)
}

pub(crate) fn kernel_from_echelon(domain: ScalarDomain, n_cols: usize, rows: &[Row]) -> Vec<SparseVec> {
    let mut is_pivot = vec![false; n_cols];
    let mut per_free: Vec<Row> = vec![Vec::new(); n_cols];
    for row in rows {
        let lead = row[0].0;
        is_pivot[lead] = true;
        for (c, v) in &row[1..] {
            per_free[*c].push((lead, -v));
        }
    }
    (0..n_cols)
        .filter(|c| !is_pivot[*c])
        .map(|f| {
            let mut entries = std::mem::take(&mut per_free[f]);
            entries.push((f, Scalar::one(domain)));
            entries.sort_by_key(|e| e.0);
            SparseVec::from_row(domain, n_cols, entries)
        })
        .collect()
}

/// Inverse of a square matrix, `None` if singular.
pub fn invert(m: &SparseMatrix) -> Option<SparseMatrix> {
    let n = m.n_rows();
    assert_eq!(n, m.n_cols(), "invert needs a square matrix");
    let domain = m.domain();
    if n == 0 {
        return Some(m.clone());
    }
    let aug: Vec<Row> = m
        .raw_rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.push((n + i, Scalar::one(domain)));
            r
        })
        .collect();
    let rows = echelon_rows(2 * n, aug);
    if rows.len() < n || rows[n - 1][0].0 != n - 1 {
        return None;
    }
    let inv_rows = rows
        .into_iter()
        .take(n)
        .map(|r| {
            r.into_iter()
                .filter(|(c, _)| *c >= n)
                .map(|(c, v)| (c - n, v))
                .collect()
        })
        .collect();
    Some(SparseMatrix::from_raw_rows(domain, n, inv_rows))
}

/// One solution of `m x = b` (free variables set to zero), or `None` if
/// the system is inconsistent.
pub fn solve(m: &SparseMatrix, b: &SparseVec) -> Option<SparseVec> {
    assert_eq!(m.n_rows(), b.len(), "right-hand side length mismatch");
    let n = m.n_cols();
    let mut aug: Vec<Row> = m.raw_rows().to_vec();
    for (i, v) in b.entries() {
        aug[*i].push((n, v.clone()));
    }
    let rows = echelon_rows(n + 1, aug);
    let mut entries = Vec::new();
    for r in &rows {
        let lead = r[0].0;
        if lead == n {
            return None;
        }
        if let Some((c, v)) = r.last() {
            if *c == n {
                entries.push((lead, v.clone()));
            }
        }
    }
    Some(SparseVec::from_row(m.domain(), n, entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: ScalarDomain = ScalarDomain::Rational;

    #[test]
    fn rank_one_over_q_and_f5() {
        let m = SparseMatrix::from_i64_rows(Q, &[vec![1, 2], vec![2, 4]]);
        let r = rref(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        let f5 = ScalarDomain::Prime(5);
        let m5 = SparseMatrix::from_i64_rows(f5, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(rref(&m5).rank, 1);
    }

    #[test]
    fn identity_is_its_own_rref() {
        let id = SparseMatrix::identity(Q, 3);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn kernel_examples() {
        let m = SparseMatrix::from_i64_rows(Q, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(kernel_basis(&m), vec![SparseVec::from_i64s(Q, &[-2, 1])]);
        assert!(kernel_basis(&SparseMatrix::identity(Q, 2)).is_empty());
        let z = SparseMatrix::zero(Q, 2, 3);
        let k = kernel_basis(&z);
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            assert_eq!(*v, SparseVec::unit(Q, 3, i));
        }
    }

    #[test]
    fn inverse_and_solve() {
        let m = SparseMatrix::from_i64_rows(Q, &[vec![2, 1], vec![1, 1]]);
        let inv = invert(&m).unwrap();
        assert_eq!(m.mul(&inv), SparseMatrix::identity(Q, 2));
        let singular = SparseMatrix::from_i64_rows(Q, &[vec![1, 2], vec![2, 4]]);
        assert!(invert(&singular).is_none());
        let b = SparseVec::from_i64s(Q, &[3, 2]);
        let x = solve(&m, &b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(solve(&singular, &SparseVec::from_i64s(Q, &[1, 0])).is_none());
    }

    #[test]
    fn block_split_matches_single_block() {
        // two independent blocks interleaved in column order
        let m = SparseMatrix::from_i64_rows(
            Q,
            &[
                vec![1, 0, 2, 0, 0],
                vec![0, 3, 0, 1, 0],
                vec![2, 0, 4, 0, 1],
                vec![0, 6, 0, 2, 0],
            ],
        );
        let r = rref(&m);
        assert_eq!(r.pivots, vec![0, 1, 4]);
        let expected = SparseMatrix::from_i64_rows(
            Q,
            &[
                vec![1, 0, 2, 0, 0],
                vec![0, 3, 0, 1, 0],
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 0, 0, 0],
            ],
        );
        // row 1 is monic: (0, 1, 0, 1/3, 0)
        assert_eq!(r.matrix.row(0), expected.row(0));
        assert_eq!(r.matrix.row(2), expected.row(2));
        assert_eq!(
            r.matrix.get(1, 3),
            Scalar::Rational(num_rational::BigRational::new(1.into(), 3.into()))
        );
    }
}
