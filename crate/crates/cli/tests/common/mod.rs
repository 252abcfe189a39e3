//! Brute-force oracles, independent of the library's solvers.
//!
//! Everything here works with dense rows of residues mod a prime. Algebras
//! over `Q` are reduced mod `ORACLE_PRIME`; all their structure constants are
//! small integers or small fractions, so dimensions agree with the rational
//! ones unless the prime divides a minor, which for these systems it does not
//! (the frozen values are cross-checked against exact library output).

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use liederive::exactla::{Scalar, ScalarDomain};
use liederive::liecore::LieAlgebra;

pub const ORACLE_PRIME: u64 = 2_147_483_647;

pub fn modulus(domain: ScalarDomain) -> u64 {
    match domain {
        ScalarDomain::Rational => ORACLE_PRIME,
        ScalarDomain::Prime(p) => p as u64,
    }
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "division by zero mod {p}");
    pow_mod(a, p - 2, p)
}

pub fn int_mod(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Residue of a scalar, read from its text form `n` or `n/d`.
pub fn text_mod(text: &str, p: u64) -> u64 {
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n: i128 = n.parse().expect("small numerator");
    let d: i128 = d.parse().expect("small denominator");
    let n = n.rem_euclid(p as i128) as u64;
    let d = d.rem_euclid(p as i128) as u64;
    n * inv_mod(d, p) % p
}

pub fn scalar_mod(s: &Scalar, p: u64) -> u64 {
    text_mod(&s.to_string(), p)
}

/// Dense structure constants `c[i][j][k]` of `[b_i, b_j]`, both orders.
pub fn structure(l: &LieAlgebra, p: u64) -> Vec<Vec<Vec<u64>>> {
    let n = l.dim();
    let mut c = vec![vec![vec![0u64; n]; n]; n];
    for (i, j, v) in l.constants() {
        for (k, x) in v.entries() {
            let r = scalar_mod(x, p);
            c[i][j][*k] = r;
            c[j][i][*k] = (p - r) % p;
        }
    }
    c
}

/// Incremental reduced row echelon form mod `p`. Rows are kept fully
/// reduced, so reducing a new row needs one pass over its pivot entries.
pub struct Eliminator {
    pub p: u64,
    pub cols: usize,
    rows: Vec<Vec<u64>>,
    pivot_of_col: Vec<Option<usize>>,
}

impl Eliminator {
    pub fn new(p: u64, cols: usize) -> Self {
        Eliminator {
            p,
            cols,
            rows: Vec::new(),
            pivot_of_col: vec![None; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Add a sparse row given as `(col, value)`; repeated columns are summed.
    pub fn push(&mut self, entries: &[(usize, u64)]) {
        let p = self.p;
        let mut row = vec![0u64; self.cols];
        for &(c, v) in entries {
            row[c] = (row[c] + v) % p;
        }
        let support: Vec<usize> = (0..self.cols).filter(|&c| row[c] != 0).collect();
        for c in support {
            if let Some(r) = self.pivot_of_col[c] {
                let f = row[c];
                if f != 0 {
                    for (k, x) in self.rows[r].iter().enumerate() {
                        if *x != 0 {
                            row[k] = (row[k] + p - f * x % p) % p;
                        }
                    }
                }
            }
        }
        let Some(lead) = row.iter().position(|x| *x != 0) else {
            return;
        };
        let inv = inv_mod(row[lead], p);
        for x in row.iter_mut() {
            *x = *x * inv % p;
        }
        for other in self.rows.iter_mut() {
            let f = other[lead];
            if f != 0 {
                for (k, x) in row.iter().enumerate() {
                    if *x != 0 {
                        other[k] = (other[k] + p - f * x % p) % p;
                    }
                }
            }
        }
        self.pivot_of_col[lead] = Some(self.rows.len());
        self.rows.push(row);
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        (0..self.cols)
            .filter(|&c| self.pivot_of_col[c].is_none())
            .map(|free| {
                let mut v = vec![0u64; self.cols];
                v[free] = 1;
                for (c, r) in self.pivot_of_col.iter().enumerate() {
                    if let Some(r) = r {
                        v[c] = (p - self.rows[*r][free]) % p;
                    }
                }
                v
            })
            .collect()
    }

    /// Whether `v` is orthogonal to every stored row, i.e. lies in the kernel.
    pub fn annihilates(&self, v: &[u64]) -> bool {
        self.rows.iter().all(|r| {
            r.iter()
                .zip(v)
                .fold(0u64, |acc, (a, b)| (acc + a * b % self.p) % self.p)
                == 0
        })
    }
}

/// `dim Der(L)`: unknowns `D[a][i]`, the coefficient of `b_a` in `D b_i`.
pub fn derivation_dim(c: &[Vec<Vec<u64>>], p: u64) -> usize {
    let n = c.len();
    let col = |a: usize, i: usize| a * n + i;
    let mut e = Eliminator::new(p, n * n);
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                // D[b_i, b_j] - [D b_i, b_j] - [b_i, D b_j], coordinate m
                let mut row = Vec::new();
                for k in 0..n {
                    if c[i][j][k] != 0 {
                        row.push((col(m, k), c[i][j][k]));
                    }
                }
                for a in 0..n {
                    if c[a][j][m] != 0 {
                        row.push((col(a, i), p - c[a][j][m]));
                    }
                    if c[i][a][m] != 0 {
                        row.push((col(a, j), p - c[i][a][m]));
                    }
                }
                e.push(&row);
            }
        }
    }
    e.nullity()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sym {
    Symmetric,
    Skew,
}

/// Column of `d(i, j)_k` for symmetric or skew tensors and its sign.
fn sym_col(kind: Sym, n: usize, i: usize, j: usize, k: usize) -> Option<(usize, bool)> {
    let (a, b, neg) = if i <= j {
        (i, j, false)
    } else {
        (j, i, kind == Sym::Skew)
    };
    if kind == Sym::Skew && a == b {
        return None;
    }
    // pairs a <= b in row-major order
    let pair = a * n - a * (a + 1) / 2 + b;
    Some((pair * n + k, neg))
}

pub struct BiderOracle {
    pub n: usize,
    pub kind: Sym,
    pub elim: Eliminator,
}

impl BiderOracle {
    /// Solve `delta(x, [y, z]) = [delta(x, y), z] + [y, delta(x, z)]` for
    /// tensors of the given symmetry. The second slot then follows.
    pub fn solve(c: &[Vec<Vec<u64>>], p: u64, kind: Sym) -> Self {
        let n = c.len();
        let cols = n * n * (n + 1) / 2;
        let mut elim = Eliminator::new(p, cols);
        let add = |row: &mut Vec<(usize, u64)>, col: Option<(usize, bool)>, v: u64| {
            if let Some((c, neg)) = col {
                row.push((c, if neg { (p - v) % p } else { v }));
            }
        };
        'outer: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for m in 0..n {
                        let mut row = Vec::new();
                        for q in 0..n {
                            if c[y][z][q] != 0 {
                                add(&mut row, sym_col(kind, n, x, q, m), c[y][z][q]);
                            }
                            if c[q][z][m] != 0 {
                                add(&mut row, sym_col(kind, n, x, y, q), p - c[q][z][m]);
                            }
                            if c[y][q][m] != 0 {
                                add(&mut row, sym_col(kind, n, x, z, q), p - c[y][q][m]);
                            }
                        }
                        elim.push(&row);
                        if elim.full() {
                            break 'outer;
                        }
                    }
                }
            }
        }
        BiderOracle { n, kind, elim }
    }

    /// Unused columns (diagonal pairs in skew mode) are not unknowns.
    pub fn dim(&self) -> usize {
        let n = self.n;
        let phantom = if self.kind == Sym::Skew { n * n } else { 0 };
        self.elim.nullity() - phantom
    }

    /// The tensor `lambda [x, y]` as a vector in this layout.
    pub fn bracket_vector(&self, c: &[Vec<Vec<u64>>]) -> Vec<u64> {
        let n = self.n;
        let mut v = vec![0u64; self.elim.cols];
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    if let Some((col, _)) = sym_col(self.kind, n, i, j, k) {
                        v[col] = c[i][j][k];
                    }
                }
            }
        }
        v
    }

    /// Nonphantom kernel vectors as dense tensors `t[i][j][k]`.
    pub fn solutions(&self) -> Vec<Vec<Vec<Vec<u64>>>> {
        let n = self.n;
        let p = self.elim.p;
        self.elim
            .kernel()
            .into_iter()
            .map(|v| {
                let mut t = vec![vec![vec![0u64; n]; n]; n];
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            if let Some((col, neg)) = sym_col(self.kind, n, i, j, k) {
                                t[i][j][k] = if neg { (p - v[col]) % p } else { v[col] };
                            }
                        }
                    }
                }
                t
            })
            .filter(|t| t.iter().flatten().flatten().any(|x| *x != 0))
            .collect()
    }

    /// `dim {x : delta(x, .) = 0 for every solution}`.
    pub fn radical_dim(&self) -> usize {
        let n = self.n;
        let sols = self.solutions();
        let mut e = Eliminator::new(self.elim.p, n);
        for t in &sols {
            for j in 0..n {
                for k in 0..n {
                    let row: Vec<(usize, u64)> = (0..n).filter(|&i| t[i][j][k] != 0).map(|i| (i, t[i][j][k])).collect();
                    e.push(&row);
                }
            }
        }
        e.nullity()
    }
}

/// Nonzero commutative products on `aff(1)` (`[x, y] = x`) over `F_p`
/// satisfying both commutative post-Lie identities, by exhaustive search
/// over all `p^6` products. Each product is `[xx, xy, yy]` as pairs.
pub fn aff1_postlie_products(p: u64) -> BTreeSet<[[u64; 2]; 3]> {
    let c = {
        let mut c = vec![vec![vec![0u64; 2]; 2]; 2];
        c[0][1][0] = 1;
        c[1][0][0] = p - 1;
        c
    };
    let bracket = |u: &[u64; 2], v: &[u64; 2]| -> [u64; 2] {
        let mut out = [0u64; 2];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    out[k] = (out[k] + u[i] * v[j] % p * c[i][j][k]) % p;
                }
            }
        }
        out
    };
    let mut found = BTreeSet::new();
    let total = p.pow(6);
    for code in 1..total {
        let mut digits = [0u64; 6];
        let mut x = code;
        for d in digits.iter_mut() {
            *d = x % p;
            x /= p;
        }
        let table = [[digits[0], digits[1]], [digits[2], digits[3]], [digits[4], digits[5]]];
        let prod_basis = |i: usize, j: usize| -> [u64; 2] {
            match (i.min(j), i.max(j)) {
                (0, 0) => table[0],
                (0, 1) => table[1],
                _ => table[2],
            }
        };
        let prod = |u: &[u64; 2], v: &[u64; 2]| -> [u64; 2] {
            let mut out = [0u64; 2];
            for i in 0..2 {
                for j in 0..2 {
                    let b = prod_basis(i, j);
                    for k in 0..2 {
                        out[k] = (out[k] + u[i] * v[j] % p * b[k]) % p;
                    }
                }
            }
            out
        };
        let e = |i: usize| if i == 0 { [1u64, 0] } else { [0, 1] };
        let sub = |a: [u64; 2], b: [u64; 2]| [(a[0] + p - b[0]) % p, (a[1] + p - b[1]) % p];
        let add = |a: [u64; 2], b: [u64; 2]| [(a[0] + b[0]) % p, (a[1] + b[1]) % p];
        let mut ok = true;
        'check: for a in 0..2 {
            for b in 0..2 {
                for z in 0..2 {
                    let (x, y, z) = (e(a), e(b), e(z));
                    // [x,y].z = x.(y.z) - y.(x.z)
                    let lhs = prod(&bracket(&x, &y), &z);
                    let rhs = sub(prod(&x, &prod(&y, &z)), prod(&y, &prod(&x, &z)));
                    // x.[y,z] = [x.y, z] + [y, x.z]
                    let lhs2 = prod(&x, &bracket(&y, &z));
                    let rhs2 = add(bracket(&prod(&x, &y), &z), bracket(&y, &prod(&x, &z)));
                    if lhs != rhs || lhs2 != rhs2 {
                        ok = false;
                        break 'check;
                    }
                }
            }
        }
        if ok {
            found.insert(table);
        }
    }
    found
}

/// A vector field `t^alpha d_var` of the Witt algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    pub alpha: Vec<u32>,
    pub var: usize,
}

impl Field {
    pub fn degree(&self) -> u32 {
        self.alpha.iter().sum()
    }

    /// `alpha - e_var`, the weight under the torus of `t_i d_i`.
    pub fn weight(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.alpha.iter().map(|a| *a as i64).collect();
        w[self.var] -= 1;
        w
    }

    pub fn label(&self) -> String {
        if self.alpha.len() == 1 {
            return format!("D[{}]", self.degree() as i64 - 1);
        }
        let mut parts = Vec::new();
        for (k, e) in self.alpha.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("t{}", k + 1)),
                _ => parts.push(format!("t{}^{e}", k + 1)),
            }
        }
        parts.push(format!("d{}", self.var + 1));
        parts.join("*")
    }
}

/// `[t^a d_u, t^b d_v] = b_u t^(a+b-e_u) d_v - a_v t^(a+b-e_v) d_u`, exact.
pub fn witt_bracket(x: &Field, y: &Field) -> Vec<(Field, i64)> {
    let mut out: BTreeMap<Field, i64> = BTreeMap::new();
    let mut term = |coef: i64, drop: usize, var: usize| {
        if coef == 0 {
            return;
        }
        let mut alpha: Vec<u32> = x.alpha.iter().zip(&y.alpha).map(|(a, b)| a + b).collect();
        alpha[drop] -= 1;
        *out.entry(Field { alpha, var }).or_default() += coef;
    };
    term(y.alpha[x.var] as i64, x.var, y.var);
    term(-(x.alpha[y.var] as i64), y.var, x.var);
    out.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn all_alphas(n: usize, deg: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![deg]];
    }
    let mut out = Vec::new();
    for first in 0..=deg {
        for rest in all_alphas(n - 1, deg - first) {
            let mut a = vec![first];
            a.extend(rest);
            out.push(a);
        }
    }
    out
}

/// One row of the oracle's generator table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleGenerator {
    pub label: String,
    pub degree: u32,
    pub partners: BTreeSet<String>,
    pub non_vanishing: BTreeSet<String>,
}

impl OracleGenerator {
    pub fn status(&self) -> &'static str {
        if self.partners.is_empty() {
            "unconstrained"
        } else if self.non_vanishing.is_empty() {
            "all_vanish"
        } else {
            "non_vanishing"
        }
    }
}

pub struct WittOracle {
    pub basis: Vec<Field>,
    pub window: usize,
    pub dim: usize,
    pub generators: Vec<OracleGenerator>,
    /// Elimination per weight block, with the global columns of each block.
    blocks: HashMap<Vec<i64>, (Vec<usize>, Eliminator)>,
    col_block: Vec<(Vec<i64>, usize)>,
    p: u64,
}

impl WittOracle {
    /// Windowed problem with ordered-pair unknowns `d(i, j)_k` and explicit
    /// mode rows. An identity coordinate `m` is imposed when the bracket in
    /// the `delta` argument stays in the window and
    /// `deg m < N + min(deg of the plain bracket arguments)`.
    pub fn solve(n_vars: usize, cap: u32, inner: u32, kind: Sym, p: u64) -> Self {
        let mut basis = Vec::new();
        for deg in 0..=cap {
            for var in 0..n_vars {
                let mut alphas = all_alphas(n_vars, deg);
                alphas.sort();
                alphas.reverse();
                for alpha in alphas {
                    basis.push(Field { alpha, var });
                }
            }
        }
        let index: HashMap<Field, usize> = basis.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        let dim = basis.len();
        let window = basis.iter().filter(|f| f.degree() <= inner).count();
        let deg = |i: usize| basis[i].degree();
        let col = |i: usize, j: usize, k: usize| (i * window + j) * dim + k;
        let n_cols = window * window * dim;

        let bracket: Vec<Vec<Vec<(usize, i64)>>> = (0..window)
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        witt_bracket(&basis[a], &basis[b])
                            .into_iter()
                            .filter_map(|(f, c)| index.get(&f).map(|k| (*k, c)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let in_window = |v: &[(usize, i64)]| v.iter().all(|(k, _)| *k < window);

        let mut identity_rows: Vec<Vec<(usize, i64)>> = Vec::new();
        for a in 0..window {
            for b in 0..window {
                for c in 0..window {
                    // delta([a,b], c) - [a, delta(b,c)] + [b, delta(a,c)]
                    if in_window(&bracket[a][b]) {
                        let low = deg(a).min(deg(b));
                        for m in (0..dim).filter(|&m| deg(m) < cap + low) {
                            let mut row = Vec::new();
                            for &(q, v) in &bracket[a][b] {
                                row.push((col(q, c, m), v));
                            }
                            for q in 0..dim {
                                for &(k, v) in &bracket[a][q] {
                                    if k == m {
                                        row.push((col(b, c, q), -v));
                                    }
                                }
                                for &(k, v) in &bracket[b][q] {
                                    if k == m {
                                        row.push((col(a, c, q), v));
                                    }
                                }
                            }
                            identity_rows.push(row);
                        }
                    }
                    // delta(a, [b,c]) - [delta(a,b), c] - [b, delta(a,c)]
                    if in_window(&bracket[b][c]) {
                        let low = deg(b).min(deg(c));
                        for m in (0..dim).filter(|&m| deg(m) < cap + low) {
                            let mut row = Vec::new();
                            for &(q, v) in &bracket[b][c] {
                                row.push((col(a, q, m), v));
                            }
                            for q in 0..dim {
                                // [b_q, c] = -[c, b_q]
                                for &(k, v) in &bracket[c][q] {
                                    if k == m {
                                        row.push((col(a, b, q), v));
                                    }
                                }
                                for &(k, v) in &bracket[b][q] {
                                    if k == m {
                                        row.push((col(a, c, q), -v));
                                    }
                                }
                            }
                            identity_rows.push(row);
                        }
                    }
                }
            }
        }

        // Which canonical components occur in an identity row after merging
        // the two orders of each pair.
        let canon = |c: usize| -> (usize, i64) {
            let (pair, k) = (c / dim, c % dim);
            let (i, j) = (pair / window, pair % window);
            let sign = if i > j && kind == Sym::Skew { -1 } else { 1 };
            (col(i.min(j), i.max(j), k), sign)
        };
        let mut seen = vec![false; n_cols];
        for row in &identity_rows {
            let mut merged: BTreeMap<usize, i64> = BTreeMap::new();
            for &(c, v) in row {
                let (cc, s) = canon(c);
                *merged.entry(cc).or_default() += s * v;
            }
            for (c, v) in merged {
                if v != 0 {
                    seen[c] = true;
                }
            }
        }

        let mut mode_rows = Vec::new();
        for i in 0..window {
            for j in i..window {
                for k in 0..dim {
                    match kind {
                        Sym::Symmetric if i < j => mode_rows.push(vec![(col(i, j, k), 1), (col(j, i, k), -1)]),
                        Sym::Skew if i < j => mode_rows.push(vec![(col(i, j, k), 1), (col(j, i, k), 1)]),
                        Sym::Skew => mode_rows.push(vec![(col(i, i, k), 1)]),
                        _ => {}
                    }
                }
            }
        }

        // Every row is homogeneous: all its columns share one weight shift.
        let shift = |c: usize| -> Vec<i64> {
            let (pair, k) = (c / dim, c % dim);
            let (i, j) = (pair / window, pair % window);
            let (wi, wj, wk) = (basis[i].weight(), basis[j].weight(), basis[k].weight());
            (0..n_vars).map(|v| wk[v] - wi[v] - wj[v]).collect()
        };
        let mut block_cols: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
        let mut col_block = Vec::with_capacity(n_cols);
        for c in 0..n_cols {
            let s = shift(c);
            let cols = block_cols.entry(s.clone()).or_default();
            col_block.push((s, cols.len()));
            cols.push(c);
        }
        let mut blocks: HashMap<Vec<i64>, (Vec<usize>, Eliminator)> = block_cols
            .into_iter()
            .map(|(s, cols)| {
                let e = Eliminator::new(p, cols.len());
                (s, (cols, e))
            })
            .collect();
        for row in identity_rows.iter().chain(&mode_rows) {
            let Some(&(first, _)) = row.first() else { continue };
            let s = &col_block[first].0;
            let local: Vec<(usize, u64)> = row
                .iter()
                .map(|&(c, v)| {
                    assert_eq!(&col_block[c].0, s, "row mixes weight blocks");
                    (col_block[c].1, int_mod(v, p))
                })
                .collect();
            blocks.get_mut(s).expect("block").1.push(&local);
        }

        let mut nonzero_pair = vec![false; window * window];
        let mut dim_solution = 0;
        for (cols, e) in blocks.values() {
            for v in e.kernel() {
                dim_solution += 1;
                for (local, x) in v.iter().enumerate() {
                    if *x != 0 {
                        nonzero_pair[cols[local] / dim] = true;
                    }
                }
            }
        }

        let interior = |i: usize, j: usize| {
            let (a, b) = (i.min(j), i.max(j));
            inner > 0 && deg(i) < inner && deg(j) < inner && (0..dim).all(|k| seen[col(a, b, k)])
        };
        let generators = (0..window)
            .map(|i| {
                let partners: Vec<usize> = (0..window).filter(|&j| interior(i, j)).collect();
                OracleGenerator {
                    label: basis[i].label(),
                    degree: deg(i),
                    partners: partners.iter().map(|&j| basis[j].label()).collect(),
                    non_vanishing: partners
                        .iter()
                        .filter(|&&j| nonzero_pair[i * window + j])
                        .map(|&j| basis[j].label())
                        .collect(),
                }
            })
            .collect();

        WittOracle {
            basis,
            window,
            dim: dim_solution,
            generators,
            blocks,
            col_block,
            p,
        }
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|f| f.label() == label)
    }

    /// Whether an ordered-pair tensor `(i, j, k, value)` solves the system.
    pub fn solves(&self, entries: &[(usize, usize, usize, u64)]) -> bool {
        let dim = self.basis.len();
        let mut per_block: HashMap<&Vec<i64>, Vec<u64>> = HashMap::new();
        for &(i, j, k, v) in entries {
            let c = (i * self.window + j) * dim + k;
            let (s, local) = &self.col_block[c];
            let (cols, _) = &self.blocks[s];
            per_block.entry(s).or_insert_with(|| vec![0; cols.len()])[*local] = v % self.p;
        }
        per_block.iter().all(|(s, v)| self.blocks[*s].1.annihilates(v))
    }
}
