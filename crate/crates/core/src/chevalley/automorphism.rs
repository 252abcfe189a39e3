use super::ChevalleyError;
use crate::exactla::{invert, rank, Scalar, SparseMatrix, SparseVec};
use crate::liecore::LieAlgebra;

/// An invertible linear map on `L` that preserves the bracket. The matrix
/// acts on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismMatrix {
    matrix: SparseMatrix,
}

impl AutomorphismMatrix {
    /// Wrap `m` after checking it against `l`.
    pub fn new(l: &LieAlgebra, m: SparseMatrix) -> Result<Self, ChevalleyError> {
        if !is_automorphism(l, &m) {
            return Err(ChevalleyError::NotAutomorphism);
        }
        Ok(AutomorphismMatrix { matrix: m })
    }

    pub fn identity(l: &LieAlgebra) -> Self {
        AutomorphismMatrix {
            matrix: SparseMatrix::identity(l.domain(), l.dim()),
        }
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.n_rows()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.mul_vec(v)
    }

    pub fn inverse(&self) -> AutomorphismMatrix {
        AutomorphismMatrix {
            matrix: invert(&self.matrix).expect("automorphisms are invertible"),
        }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &AutomorphismMatrix) -> AutomorphismMatrix {
        AutomorphismMatrix {
            matrix: self.matrix.mul(&other.matrix),
        }
    }
}

/// True iff `m` is invertible and `m[b_i, b_j] = [m b_i, m b_j]` for all `i < j`.
pub fn is_automorphism(l: &LieAlgebra, m: &SparseMatrix) -> bool {
    let n = l.dim();
    if m.n_rows() != n || m.n_cols() != n || m.domain() != l.domain() {
        return false;
    }
    if rank(m) != n {
        return false;
    }
    let images = m.columns();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = m.mul_vec(l.basis_bracket(i, j));
            let rhs = l.bracket(&images[i], &images[j]).expect("sized");
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `exp(lambda ad x)` as a finite sum, for `ad x` nilpotent.
pub fn exp_ad_nilpotent(l: &LieAlgebra, x: &SparseVec, lambda: &Scalar) -> Result<AutomorphismMatrix, ChevalleyError> {
    let domain = l.domain();
    let n = l.dim();
    let ad = l.ad_matrix(x)?.scale(lambda);
    let mut powers = vec![SparseMatrix::identity(domain, n)];
    loop {
        let next = powers.last().expect("nonempty").mul(&ad);
        if next.is_zero() {
            break;
        }
        if powers.len() > n {
            return Err(ChevalleyError::NotNilpotent);
        }
        powers.push(next);
    }
    let mut sum = SparseMatrix::zero(domain, n, n);
    let mut factorial = Scalar::one(domain);
    for (k, p) in powers.iter().enumerate() {
        if k > 0 {
            factorial = &factorial * &Scalar::from_i64(domain, k as i64);
        }
        let inv = factorial
            .inv()
            .ok_or(ChevalleyError::FactorialNotInvertible(k, domain.characteristic()))?;
        sum = sum.add(&p.scale(&inv));
    }
    AutomorphismMatrix::new(l, sum)
}

/// Recover `u_0..u_degree` from samples of `value(lambda) = sum lambda^m u_m`.
/// The first `degree + 1` samples determine the coefficients; any further
/// samples are checked against them.
pub fn vandermonde_extract(samples: &[(Scalar, SparseVec)], degree: usize) -> Result<Vec<SparseVec>, ChevalleyError> {
    let needed = degree + 1;
    if samples.len() < needed {
        return Err(ChevalleyError::TooFewSamples {
            needed,
            got: samples.len(),
        });
    }
    for (i, (a, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(b, _)| b == a) {
            return Err(ChevalleyError::RepeatedLambda(a.to_string()));
        }
    }
    let domain = samples[0].0.domain();
    let len = samples[0].1.len();
    for (_, v) in samples {
        if v.len() != len {
            return Err(ChevalleyError::DimensionMismatch {
                expected: len,
                got: v.len(),
            });
        }
    }
    let row = |lambda: &Scalar| -> Vec<Scalar> { (0..needed).map(|m| lambda.pow(m as u32)).collect() };
    let vander = SparseMatrix::from_rows(
        domain,
        needed,
        &samples[..needed]
            .iter()
            .map(|(lambda, _)| SparseVec::from_dense(domain, &row(lambda)).expect("domain"))
            .collect::<Vec<_>>(),
    );
    let inv = invert(&vander).expect("distinct parameters");
    let coeffs: Vec<SparseVec> = (0..needed)
        .map(|m| {
            let mut u = SparseVec::zero(domain, len);
            for (s, c) in inv.row_entries(m) {
                u = u.sub_scaled(&-c, &samples[*s].1);
            }
            u
        })
        .collect();
    for (lambda, v) in &samples[needed..] {
        let mut acc = SparseVec::zero(domain, len);
        for (m, p) in row(lambda).iter().enumerate() {
            acc = acc.sub_scaled(&-p, &coeffs[m]);
        }
        if &acc != v {
            return Err(ChevalleyError::InconsistentSamples(degree));
        }
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::ScalarDomain;
    use crate::liecore::standard::{heisenberg, sl2};

    const Q: ScalarDomain = ScalarDomain::Rational;

    fn v(x: &[i64]) -> SparseVec {
        SparseVec::from_i64s(Q, x)
    }

    #[test]
    fn exp_ad_e_on_sl2() {
        let l = sl2(Q);
        let s = exp_ad_nilpotent(&l, &v(&[1, 0, 0]), &Scalar::one(Q)).unwrap();
        assert_eq!(s.apply(&v(&[1, 0, 0])), v(&[1, 0, 0]));
        assert_eq!(s.apply(&v(&[0, 1, 0])), v(&[-2, 1, 0]));
        assert_eq!(s.apply(&v(&[0, 0, 1])), v(&[-1, 1, 1]));
        let id = exp_ad_nilpotent(&l, &v(&[1, 0, 0]), &Scalar::zero(Q)).unwrap();
        assert_eq!(id, AutomorphismMatrix::identity(&l));
    }

    #[test]
    fn central_element_gives_identity() {
        let l = heisenberg(Q);
        let s = exp_ad_nilpotent(&l, &v(&[0, 0, 1]), &Scalar::from_i64(Q, 7)).unwrap();
        assert_eq!(s, AutomorphismMatrix::identity(&l));
    }

    #[test]
    fn semisimple_element_is_rejected() {
        let l = sl2(Q);
        assert_eq!(
            exp_ad_nilpotent(&l, &v(&[0, 1, 0]), &Scalar::one(Q)),
            Err(ChevalleyError::NotNilpotent)
        );
    }

    #[test]
    fn small_characteristic_factorials() {
        // filiform [x,y]=z, [x,z]=w: (ad x)^2 != 0, so 2 must be invertible
        let f2 = ScalarDomain::Prime(2);
        let l = LieAlgebra::new(
            f2,
            4,
            None,
            vec![(0, 1, SparseVec::unit(f2, 4, 2)), (0, 2, SparseVec::unit(f2, 4, 3))],
        )
        .unwrap();
        assert_eq!(
            exp_ad_nilpotent(&l, &SparseVec::unit(f2, 4, 0), &Scalar::one(f2)),
            Err(ChevalleyError::FactorialNotInvertible(2, 2))
        );
        let f3 = ScalarDomain::Prime(3);
        let l3 = LieAlgebra::new(
            f3,
            4,
            None,
            vec![(0, 1, SparseVec::unit(f3, 4, 2)), (0, 2, SparseVec::unit(f3, 4, 3))],
        )
        .unwrap();
        assert!(exp_ad_nilpotent(&l3, &SparseVec::unit(f3, 4, 0), &Scalar::one(f3)).is_ok());
    }

    #[test]
    fn chevalley_involution() {
        let l = sl2(Q);
        let m = SparseMatrix::from_i64_rows(Q, &[vec![0, 0, 1], vec![0, -1, 0], vec![1, 0, 0]]);
        assert!(is_automorphism(&l, &m));
        assert!(is_automorphism(&l, &SparseMatrix::identity(Q, 3)));
        let bad = SparseMatrix::from_i64_rows(Q, &[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert!(!is_automorphism(&l, &bad));
        assert!(!is_automorphism(&l, &SparseMatrix::zero(Q, 3, 3)));
    }

    #[test]
    fn vandermonde_examples() {
        let s = |x: i64| Scalar::from_i64(Q, x);
        assert_eq!(
            vandermonde_extract(&[(s(1), v(&[3])), (s(2), v(&[5]))], 1).unwrap(),
            vec![v(&[1]), v(&[2])]
        );
        let c = v(&[4, -1]);
        assert_eq!(
            vandermonde_extract(&[(s(1), c.clone()), (s(2), c.clone())], 0).unwrap(),
            vec![c.clone()]
        );
        assert_eq!(
            vandermonde_extract(&[(s(1), v(&[1])), (s(2), v(&[4])), (s(3), v(&[9]))], 2).unwrap(),
            vec![v(&[0]), v(&[0]), v(&[1])]
        );
        assert_eq!(
            vandermonde_extract(&[(s(1), v(&[1])), (s(2), v(&[4])), (s(3), v(&[9]))], 1),
            Err(ChevalleyError::InconsistentSamples(1))
        );
        assert!(matches!(
            vandermonde_extract(&[(s(1), v(&[1])), (s(1), v(&[1]))], 1),
            Err(ChevalleyError::RepeatedLambda(_))
        ));
        assert!(matches!(
            vandermonde_extract(&[(s(1), v(&[1]))], 1),
            Err(ChevalleyError::TooFewSamples { needed: 2, got: 1 })
        ));
    }
}
