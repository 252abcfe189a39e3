//! Classical algebras built from their matrix realizations and re-based to
//! a Chevalley basis.
//!
//! Realizations: `sl_{n+1}` for A; for B, C, D the algebra preserving the
//! form whose matrix is anti-diagonal (all ones for the orthogonal types,
//! `+1` on the top half and `-1` on the bottom half for the symplectic
//! type), so the diagonal matrices in the algebra form a Cartan subalgebra
//! and every root space is spanned by a matrix unit or a binomial of two.

use num_bigint::BigInt;
use num_traits::One;

use super::{root_system, ChevalleyError, ClassicalType, RootDatum};
use crate::exactla::{invert, rref, Scalar, ScalarDomain, SparseMatrix, SparseVec};
use crate::liecore::{LieAlgebra, Subspace};

const Q: ScalarDomain = ScalarDomain::Rational;

/// A classical simple Lie algebra together with its Chevalley basis data.
///
/// The basis is ordered `e_1..e_P, h_1..h_n, f_1..f_P`, with `e_k`, `f_k`
/// attached to the `k`-th positive root of `datum` and `h_i = [e_i, f_i]`
/// for the `i`-th simple root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleyFrame {
    pub algebra: LieAlgebra,
    pub datum: RootDatum,
    /// Basis index of `e_alpha` for each positive root (by positive-root index).
    pub e_index: Vec<usize>,
    /// Basis index of `f_alpha` for each positive root.
    pub f_index: Vec<usize>,
    /// Basis index of `h_beta` for each simple root.
    pub h_index: Vec<usize>,
    pub cartan: Subspace,
}

impl ChevalleyFrame {
    pub fn e(&self, positive: usize) -> SparseVec {
        self.algebra.basis_vector(self.e_index[positive])
    }

    pub fn f(&self, positive: usize) -> SparseVec {
        self.algebra.basis_vector(self.f_index[positive])
    }

    /// The coroot `h_alpha = [e_alpha, f_alpha]`.
    pub fn coroot(&self, positive: usize) -> SparseVec {
        self.algebra
            .bracket(&self.e(positive), &self.f(positive))
            .expect("frame vectors")
    }

    /// Basis index of the root vector for root `idx` of the datum.
    pub fn root_vector_index(&self, idx: usize) -> usize {
        let p = self.datum.num_positive();
        if idx < p {
            self.e_index[idx]
        } else {
            self.f_index[idx - p]
        }
    }

    /// Value of root `idx` on the simple coroot `h_j`: `<alpha, beta_j^vee>`.
    pub fn root_on_simple_coroot(&self, idx: usize, j: usize) -> Scalar {
        let x = self.algebra.basis_vector(self.root_vector_index(idx));
        let h = self.algebra.basis_vector(self.h_index[j]);
        let hx = self.algebra.bracket(&h, &x).expect("frame vectors");
        hx.get(self.root_vector_index(idx))
    }

    /// Value of root `idx` on an arbitrary Cartan element.
    pub fn root_value(&self, idx: usize, h: &SparseVec) -> Scalar {
        let x = self.algebra.basis_vector(self.root_vector_index(idx));
        let hx = self.algebra.bracket(h, &x).expect("frame vectors");
        hx.get(self.root_vector_index(idx))
    }
}

/// Matrix size of the natural representation.
fn matrix_size(t: ClassicalType, n: usize) -> usize {
    match t {
        ClassicalType::A => n + 1,
        ClassicalType::B => 2 * n + 1,
        ClassicalType::C | ClassicalType::D => 2 * n,
    }
}

struct Realization {
    t: ClassicalType,
    n: usize,
    m: usize,
}

impl Realization {
    fn partner(&self, a: usize) -> usize {
        self.m - 1 - a
    }

    /// Epsilon coordinates of the diagonal position `a`.
    fn eps(&self, a: usize) -> Vec<i64> {
        let amb = if self.t == ClassicalType::A { self.n + 1 } else { self.n };
        let mut v = vec![0; amb];
        if self.t == ClassicalType::A || a < self.n {
            v[a] = 1;
        } else if self.partner(a) < self.n {
            v[self.partner(a)] = -1;
        }
        v
    }

    fn root_of_position(&self, a: usize, b: usize) -> Vec<i64> {
        self.eps(a).iter().zip(self.eps(b)).map(|(x, y)| x - y).collect()
    }

    fn sign(&self, a: usize) -> i64 {
        if a < self.n {
            1
        } else {
            -1
        }
    }

    /// Algebra element generated by the matrix unit at `(a, b)`, or `None`
    /// if the form kills it.
    fn element(&self, a: usize, b: usize) -> Option<SparseMatrix> {
        let one = Scalar::one(Q);
        let mut trip = vec![(a, b, one)];
        match self.t {
            ClassicalType::A => {}
            ClassicalType::B | ClassicalType::D => {
                // X_ab = -X_{b'a'}
                let (pa, pb) = (self.partner(a), self.partner(b));
                if (pb, pa) == (a, b) {
                    return None;
                }
                trip.push((pb, pa, Scalar::from_i64(Q, -1)));
            }
            ClassicalType::C => {
                // X_ab = s_{a'} s_b X_{b'a'}
                let (pa, pb) = (self.partner(a), self.partner(b));
                if (pb, pa) != (a, b) {
                    let s = self.sign(pa) * self.sign(b);
                    trip.push((pb, pa, Scalar::from_i64(Q, s)));
                }
            }
        }
        Some(SparseMatrix::from_triplets(Q, self.m, self.m, trip).expect("matrix unit"))
    }

    /// A nonzero root vector for `root`.
    fn root_vector(&self, root: &[i64]) -> SparseMatrix {
        for a in 0..self.m {
            for b in 0..self.m {
                if a != b && self.root_of_position(a, b) == root {
                    if let Some(x) = self.element(a, b) {
                        return x;
                    }
                }
            }
        }
        panic!("no root vector for {root:?}");
    }

    /// `alpha(H)` for a diagonal matrix `H`.
    fn evaluate(&self, root: &[i64], h: &SparseMatrix) -> Scalar {
        let mut acc = Scalar::zero(Q);
        for (k, c) in root.iter().enumerate() {
            if *c != 0 {
                acc = &acc + &(&Scalar::from_i64(Q, *c) * &h.get(k, k));
            }
        }
        acc
    }
}

fn commutator(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    a.mul(b).sub(&b.mul(a))
}

/// Chevalley basis matrices `(e, h, f)` in the natural representation.
fn chevalley_matrices(
    real: &Realization,
    datum: &RootDatum,
) -> (Vec<SparseMatrix>, Vec<SparseMatrix>, Vec<SparseMatrix>) {
    let p = datum.num_positive();
    let mut e: Vec<Option<SparseMatrix>> = vec![None; p];
    let mut f: Vec<Option<SparseMatrix>> = vec![None; p];
    let normalize_f = |alpha: &[i64], ea: &SparseMatrix| {
        let neg: Vec<i64> = alpha.iter().map(|x| -x).collect();
        let y = real.root_vector(&neg);
        let c = real.evaluate(alpha, &commutator(ea, &y));
        let t = Scalar::from_i64(Q, 2).checked_div(&c).expect("alpha(h) != 0");
        y.scale(&t)
    };
    for k in 0..p {
        let alpha = datum.roots[k].clone();
        let ea = if datum.height(k) == 1 {
            real.root_vector(&alpha)
        } else {
            // e_alpha = [e_beta, e_gamma] / (r + 1) with beta simple,
            // gamma = alpha - beta positive, r maximal with gamma - r beta a root
            let (beta_pos, gamma_pos) = datum
                .simple_roots
                .iter()
                .find_map(|&b| {
                    let gamma: Vec<i64> = alpha.iter().zip(&datum.roots[b]).map(|(x, y)| x - y).collect();
                    datum.find(&gamma).filter(|&g| g < p).map(|g| (b, g))
                })
                .expect("non-simple positive root decomposes");
            let beta = &datum.roots[beta_pos];
            let mut r = 0i64;
            loop {
                let probe: Vec<i64> = datum.roots[gamma_pos]
                    .iter()
                    .zip(beta)
                    .map(|(g, b)| g - (r + 1) * b)
                    .collect();
                if datum.is_root(&probe) {
                    r += 1;
                } else {
                    break;
                }
            }
            let br = commutator(
                e[beta_pos].as_ref().expect("processed"),
                e[gamma_pos].as_ref().expect("processed"),
            );
            br.scale(&Scalar::from_i64(Q, r + 1).inv().expect("nonzero"))
        };
        f[k] = Some(normalize_f(&alpha, &ea));
        e[k] = Some(ea);
    }
    let e: Vec<SparseMatrix> = e.into_iter().map(Option::unwrap).collect();
    let f: Vec<SparseMatrix> = f.into_iter().map(Option::unwrap).collect();
    let h: Vec<SparseMatrix> = datum.simple_roots.iter().map(|&s| commutator(&e[s], &f[s])).collect();
    (e, h, f)
}

type IntegerConstants = Vec<(usize, usize, Vec<(usize, BigInt)>)>;

/// Integer structure constants of a basis of matrices.
fn structure_constants(basis: &[SparseMatrix]) -> IntegerConstants {
    let d = basis.len();
    let flat: Vec<SparseVec> = basis.iter().map(SparseMatrix::flatten).collect();
    let len = flat[0].len();
    // pick d coordinate positions on which the basis is independent
    let positions = rref(&SparseMatrix::from_rows(Q, len, &flat)).pivots;
    assert_eq!(positions.len(), d, "basis matrices are independent");
    let square = SparseMatrix::from_columns(
        Q,
        d,
        &flat
            .iter()
            .map(|v| {
                SparseVec::from_entries(Q, d, positions.iter().enumerate().map(|(r, &p)| (r, v.get(p))))
                    .expect("in range")
            })
            .collect::<Vec<_>>(),
    );
    let solver = invert(&square).expect("independent positions");
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let w = commutator(&basis[i], &basis[j]).flatten();
            let rhs = SparseVec::from_entries(Q, d, positions.iter().enumerate().map(|(r, &p)| (r, w.get(p))))
                .expect("in range");
            let coords = solver.mul_vec(&rhs);
            let mut check = SparseVec::zero(Q, len);
            let mut ints = Vec::new();
            for (k, c) in coords.entries() {
                check = check.sub_scaled(&-c, &flat[*k]);
                let q = c.as_rational().expect("rational");
                assert!(q.denom().is_one(), "non-integral structure constant");
                ints.push((*k, q.numer().clone()));
            }
            assert_eq!(check, w, "commutator lies in the span of the basis");
            if !ints.is_empty() {
                out.push((i, j, ints));
            }
        }
    }
    out
}

/// Classical simple Lie algebra of the given type and rank over `domain`,
/// in a Chevalley basis.
pub fn classical_algebra(
    t: ClassicalType,
    rank: usize,
    domain: ScalarDomain,
) -> Result<ChevalleyFrame, ChevalleyError> {
    let datum = root_system(t, rank)?;
    if !domain.theorem_scope() {
        return Err(ChevalleyError::BadCharacteristic(domain.characteristic()));
    }
    let real = Realization {
        t,
        n: rank,
        m: matrix_size(t, rank),
    };
    let (e, h, f) = chevalley_matrices(&real, &datum);
    let p = datum.num_positive();
    let basis: Vec<SparseMatrix> = e.iter().chain(&h).chain(&f).cloned().collect();
    let dim = basis.len();
    let constants = structure_constants(&basis)
        .into_iter()
        .map(|(i, j, coeffs)| {
            let v = SparseVec::from_entries(
                domain,
                dim,
                coeffs.iter().map(|(k, c)| (*k, Scalar::from_bigint(domain, c))),
            )
            .expect("in range");
            (i, j, v)
        })
        .filter(|(_, _, v)| !v.is_zero());
    let labels: Vec<String> = (1..=p)
        .map(|k| format!("e{k}"))
        .chain((1..=rank).map(|k| format!("h{k}")))
        .chain((1..=p).map(|k| format!("f{k}")))
        .collect();
    let algebra = LieAlgebra::new(domain, dim, Some(labels), constants)?;
    let (_, nondegenerate) = algebra.killing_form();
    if !nondegenerate {
        return Err(ChevalleyError::DegenerateKilling);
    }
    let h_index: Vec<usize> = (p..p + rank).collect();
    let cartan = Subspace::span(
        domain,
        dim,
        &h_index.iter().map(|&i| algebra.basis_vector(i)).collect::<Vec<_>>(),
    );
    Ok(ChevalleyFrame {
        algebra,
        datum,
        e_index: (0..p).collect(),
        f_index: (p + rank..dim).collect(),
        h_index,
        cartan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::weight_decomposition;

    #[test]
    fn a1_is_sl2() {
        let fr = classical_algebra(ClassicalType::A, 1, Q).unwrap();
        assert_eq!(fr.algebra.dim(), 3);
        assert_eq!(fr.algebra.fingerprint(), crate::liecore::standard::sl2(Q).fingerprint());
    }

    #[test]
    fn b2_over_f7() {
        let fr = classical_algebra(ClassicalType::B, 2, ScalarDomain::Prime(7)).unwrap();
        assert_eq!(fr.algebra.dim(), 10);
        assert!(fr.algebra.killing_form().1);
    }

    #[test]
    fn sl5_over_f5_is_refused() {
        assert!(matches!(
            classical_algebra(ClassicalType::A, 4, ScalarDomain::Prime(5)),
            Err(ChevalleyError::DegenerateKilling)
        ));
        assert!(matches!(
            classical_algebra(ClassicalType::A, 1, ScalarDomain::Prime(3)),
            Err(ChevalleyError::BadCharacteristic(3))
        ));
        assert!(matches!(
            classical_algebra(ClassicalType::A, 1, ScalarDomain::Prime(2)),
            Err(ChevalleyError::BadCharacteristic(2))
        ));
        assert!(matches!(
            classical_algebra(ClassicalType::D, 2, Q),
            Err(ChevalleyError::RankOutOfRange { .. })
        ));
    }

    /// N_{alpha,beta} = +-(r+1) for every pair of roots with alpha+beta a root.
    fn assert_chevalley_constants(fr: &ChevalleyFrame) {
        let d = &fr.datum;
        for a in 0..d.roots.len() {
            for b in 0..d.roots.len() {
                let sum: Vec<i64> = d.roots[a].iter().zip(&d.roots[b]).map(|(x, y)| x + y).collect();
                let Some(s) = d.find(&sum) else { continue };
                let mut r = 0i64;
                loop {
                    let probe: Vec<i64> = d.roots[b]
                        .iter()
                        .zip(&d.roots[a])
                        .map(|(y, x)| y - (r + 1) * x)
                        .collect();
                    if d.is_root(&probe) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                let br = fr
                    .algebra
                    .basis_bracket(fr.root_vector_index(a), fr.root_vector_index(b));
                let n = br.get(fr.root_vector_index(s));
                let plus = Scalar::from_i64(Q, r + 1);
                assert!(n == plus || n == -&plus, "{:?}+{:?}: {n}", d.roots[a], d.roots[b]);
                assert_eq!(br.nnz(), 1);
            }
        }
    }

    #[test]
    fn frames_are_chevalley_bases() {
        for (t, n) in [
            (ClassicalType::A, 1),
            (ClassicalType::A, 2),
            (ClassicalType::A, 3),
            (ClassicalType::B, 2),
            (ClassicalType::B, 3),
            (ClassicalType::C, 2),
            (ClassicalType::C, 3),
            (ClassicalType::D, 3),
            (ClassicalType::D, 4),
        ] {
            let fr = classical_algebra(t, n, Q).unwrap();
            assert_eq!(fr.algebra.dim(), t.algebra_dim(n), "{t}{n}");
            assert!(fr.algebra.validate().is_valid(), "{t}{n}");
            assert_chevalley_constants(&fr);
            let two = Scalar::from_i64(Q, 2);
            for k in 0..fr.datum.num_positive() {
                let h = fr.coroot(k);
                assert!(fr.cartan.contains(&h));
                let he = fr.algebra.bracket(&h, &fr.e(k)).unwrap();
                assert_eq!(he, fr.e(k).scale(&two), "{t}{n}");
                let hf = fr.algebra.bracket(&h, &fr.f(k)).unwrap();
                assert_eq!(hf, fr.f(k).scale(&-&two), "{t}{n}");
            }
            let wd = weight_decomposition(&fr.algebra, &fr.cartan).unwrap();
            assert_eq!(wd.spaces.len(), fr.datum.roots.len() + 1);
            assert_eq!(wd.zero_space().unwrap(), &fr.cartan);
        }
    }
}
