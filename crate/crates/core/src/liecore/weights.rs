use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{LieAlgebra, LieError, Subspace};
use crate::exactla::{kernel_basis, Scalar, ScalarDomain, SparseMatrix, SparseVec};

/// Prime fields up to this size have every residue tried as an eigenvalue.
const EXHAUSTIVE_PRIME_LIMIT: u32 = 257;
/// Rational-root search gives up on constant terms larger than this.
const DIVISOR_SEARCH_LIMIT: u64 = 1 << 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    /// `weight[a]` is the eigenvalue of `ad cartan_basis[a]`.
    pub weight: Vec<Scalar>,
    pub space: Subspace,
}

/// Simultaneous eigenspace decomposition with respect to an abelian
/// subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDecomposition {
    pub cartan_basis: Vec<SparseVec>,
    pub spaces: Vec<WeightSpace>,
}

impl WeightDecomposition {
    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(|s| s.space.dim()).sum()
    }

    pub fn space_for(&self, weight: &[Scalar]) -> Option<&Subspace> {
        self.spaces.iter().find(|s| s.weight == weight).map(|s| &s.space)
    }

    pub fn zero_space(&self) -> Option<&Subspace> {
        self.spaces
            .iter()
            .find(|s| s.weight.iter().all(Scalar::is_zero))
            .map(|s| &s.space)
    }
}

/// Decompose `L` into simultaneous eigenspaces of `ad h`, `h` running over
/// the echelon basis of `cartan`.
///
/// Eigenvalue candidates come from the diagonal of `ad h` restricted to
/// the current space, every residue for `F_p` with `p <= 257`, and the
/// rational roots of the characteristic polynomial over `Q` when the
/// diagonal does not account for the whole space.
pub fn weight_decomposition(l: &LieAlgebra, cartan: &Subspace) -> Result<WeightDecomposition, LieError> {
    if cartan.ambient_dim() != l.dim() {
        return Err(LieError::DimensionMismatch {
            expected: l.dim(),
            got: cartan.ambient_dim(),
        });
    }
    let domain = l.domain();
    let cartan_basis = cartan.basis_vectors();
    for (a, h) in cartan_basis.iter().enumerate() {
        for g in &cartan_basis[a + 1..] {
            if !l.bracket_unchecked(h, g).is_zero() {
                return Err(LieError::NotAbelian);
            }
        }
    }
    let mut current = vec![(Vec::new(), Subspace::full(domain, l.dim()))];
    for (idx, h) in cartan_basis.iter().enumerate() {
        let ad = l.ad_matrix(h)?;
        let mut next = Vec::new();
        for (weight, space) in current {
            let pieces = split_space(&ad, &space).ok_or(LieError::NotDiagonalizable(idx))?;
            for (lambda, piece) in pieces {
                let mut w: Vec<Scalar> = weight.clone();
                w.push(lambda);
                next.push((w, piece));
            }
        }
        current = next;
    }
    let mut spaces: Vec<WeightSpace> = current
        .into_iter()
        .filter(|(_, s)| s.dim() > 0)
        .map(|(weight, space)| WeightSpace { weight, space })
        .collect();
    spaces.sort_by(|a, b| {
        a.weight
            .iter()
            .zip(&b.weight)
            .map(|(x, y)| x.canonical_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(WeightDecomposition { cartan_basis, spaces })
}

/// Eigenspaces of `ad` restricted to the invariant subspace `space`, or
/// `None` if they do not fill it.
fn split_space(ad: &SparseMatrix, space: &Subspace) -> Option<Vec<(Scalar, Subspace)>> {
    let domain = ad.domain();
    let basis = space.basis_vectors();
    let k = basis.len();
    if k == 0 {
        return Some(Vec::new());
    }
    // restricted matrix, column i = coordinates of ad(v_i)
    let cols: Vec<SparseVec> = basis
        .iter()
        .map(|v| {
            let coords = space.coordinates(&ad.mul_vec(v))?;
            SparseVec::from_dense(domain, &coords).ok()
        })
        .collect::<Option<_>>()?;
    let restricted = SparseMatrix::from_columns(domain, k, &cols);

    let mut found: Vec<(Scalar, Subspace)> = Vec::new();
    let mut total = 0;
    let mut tried: Vec<Scalar> = Vec::new();
    let mut try_value = |lambda: Scalar, found: &mut Vec<(Scalar, Subspace)>, total: &mut usize| {
        if tried.contains(&lambda) {
            return;
        }
        tried.push(lambda.clone());
        let shifted = restricted.sub(&SparseMatrix::identity(domain, k).scale(&lambda));
        let kernel = kernel_basis(&shifted);
        if kernel.is_empty() {
            return;
        }
        let vecs: Vec<SparseVec> = kernel
            .iter()
            .map(|c| {
                let mut acc = SparseVec::zero(domain, space.ambient_dim());
                for (i, ci) in c.entries() {
                    acc = acc.sub_scaled(&-ci, &basis[*i]);
                }
                acc
            })
            .collect();
        *total += vecs.len();
        found.push((lambda, Subspace::span(domain, space.ambient_dim(), &vecs)));
    };

    for i in 0..k {
        try_value(restricted.get(i, i), &mut found, &mut total);
    }
    if total < k {
        match domain {
            ScalarDomain::Prime(p) if p <= EXHAUSTIVE_PRIME_LIMIT => {
                for r in 0..p as i64 {
                    try_value(Scalar::from_i64(domain, r), &mut found, &mut total);
                }
            }
            ScalarDomain::Rational => {
                for root in rational_roots(&char_poly(&restricted)) {
                    try_value(Scalar::Rational(root), &mut found, &mut total);
                }
            }
            ScalarDomain::Prime(_) => {}
        }
    }
    (total == k).then_some(found)
}

/// Characteristic polynomial coefficients `c_0..c_k` (monic, `c_k = 1`) of
/// a square rational matrix, by the Faddeev-LeVerrier recursion.
fn char_poly(m: &SparseMatrix) -> Vec<BigRational> {
    let k = m.n_rows();
    let to_q = |s: &Scalar| s.as_rational().expect("rational matrix").clone();
    let a: Vec<Vec<BigRational>> = m.to_dense().iter().map(|r| r.iter().map(to_q).collect()).collect();
    let mut coeffs = vec![BigRational::zero(); k + 1];
    coeffs[k] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); k]; k];
    for step in 1..=k {
        // M_step = A M_{step-1} + c_{k-step+1} I
        let mut next = vec![vec![BigRational::zero(); k]; k];
        for i in 0..k {
            for j in 0..k {
                let mut s = BigRational::zero();
                for l in 0..k {
                    if !a[i][l].is_zero() && !mk[l][j].is_zero() {
                        s += &a[i][l] * &mk[l][j];
                    }
                }
                next[i][j] = s;
            }
            next[i][i] += &coeffs[k - step + 1];
        }
        mk = next;
        let mut tr = BigRational::zero();
        for i in 0..k {
            for l in 0..k {
                if !a[i][l].is_zero() && !mk[l][i].is_zero() {
                    tr += &a[i][l] * &mk[l][i];
                }
            }
        }
        coeffs[k - step] = -tr / BigRational::from_integer(BigInt::from(step));
    }
    coeffs
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// Rational roots of a polynomial with rational coefficients (low degree
/// first), found by the rational root theorem. Large constant terms are
/// skipped rather than factored.
fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let low = match ints.iter().position(|c| !c.is_zero()) {
        Some(p) => p,
        None => return roots,
    };
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let high = ints.iter().rposition(|c| !c.is_zero()).expect("nonzero");
    let (a0, an) = (ints[low].abs(), ints[high].abs());
    let (Some(a0), Some(an)) = (a0.to_u64(), an.to_u64()) else {
        return roots;
    };
    if a0 > DIVISOR_SEARCH_LIMIT || an > DIVISOR_SEARCH_LIMIT {
        return roots;
    }
    let eval = |x: &BigRational| {
        ints[low..=high].iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    };
    for p in divisors(a0) {
        for q in divisors(an) {
            for sign in [1i64, -1] {
                let x = BigRational::new(BigInt::from(p) * sign, BigInt::from(q));
                if !roots.contains(&x) && eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots
}
