use super::*;
use crate::chevalley::{classical_algebra, AutomorphismMatrix, ClassicalType};
use crate::exactla::{rank, ScalarDomain, SparseMatrix};
use crate::liecore::standard::{aff1, heisenberg, sl2};

const Q: ScalarDomain = ScalarDomain::Rational;

fn s(x: i64) -> Scalar {
    Scalar::from_i64(Q, x)
}

#[test]
fn derivations_of_small_algebras() {
    let l = sl2(Q);
    let der = derivation_space(&l);
    assert_eq!(der.len(), 3);
    assert!(der.iter().all(|d| is_derivation(&l, &d.matrix)));
    let inner = inner_derivations(&l);
    assert_eq!((inner.inner.dim(), inner.outer_dim), (3, 0));

    let ab = LieAlgebra::abelian(Q, 2);
    assert_eq!(derivation_space(&ab).len(), 4);
    let inner = inner_derivations(&ab);
    assert_eq!((inner.inner.dim(), inner.outer_dim), (0, 4));

    let inner = inner_derivations(&heisenberg(Q));
    assert_eq!((inner.inner.dim(), inner.outer_dim), (2, 4));

    // aff(1): x -> a x, y -> c x
    let der = derivation_space(&aff1(Q));
    assert_eq!(der.len(), 2);
    for d in &der {
        assert!(d.matrix.get(1, 0).is_zero() && d.matrix.get(1, 1).is_zero());
    }
}

#[test]
fn sl2_systems() {
    let l = sl2(Q);
    let full = biderivation_system(&l, BiderMode::Full);
    assert_eq!(full.n_cols(), 27);
    assert_eq!(rank(&full), 26);
    let sym = biderivation_system(&l, BiderMode::Symmetric);
    assert_eq!(sym.n_cols(), 18);
    assert_eq!(rank(&sym), 18);
    for mode in [BiderMode::Full, BiderMode::Symmetric, BiderMode::Skew] {
        assert!(biderivation_system(&LieAlgebra::abelian(Q, 3), mode).is_zero());
    }
}

#[test]
fn sl2_spaces() {
    let l = sl2(Q);
    assert_eq!(biderivation_space(&l, BiderMode::Symmetric).unwrap().dim_solution, 0);
    let skew = biderivation_space(&l, BiderMode::Skew).unwrap();
    assert_eq!(skew.dim_solution, 1);
    assert!(skew.contains(&BiderTensor::inner(&l)));
    assert_eq!(biderivation_space(&l, BiderMode::Full).unwrap().dim_solution, 1);
    assert!(is_biderivation(&l, &BiderTensor::inner(&l)));
    assert!(is_biderivation(&l, &BiderTensor::zero(Q, 3, BiderMode::Full)));
}

#[test]
fn abelian_symmetric_space() {
    let l = LieAlgebra::abelian(Q, 2);
    let sp = biderivation_space(&l, BiderMode::Symmetric).unwrap();
    assert_eq!(sp.dim_solution, 6);
    let one = LieAlgebra::abelian(Q, 1);
    let d = BiderTensor::from_entries(Q, 1, 1, BiderMode::Symmetric, [(0, 0, 0, s(1))]).unwrap();
    assert!(is_biderivation(&one, &d));
}

#[test]
fn char_two_refuses_split() {
    let f2 = ScalarDomain::Prime(2);
    let l = heisenberg(f2);
    assert_eq!(
        biderivation_space(&l, BiderMode::Symmetric),
        Err(BiderError::ModesCoincide)
    );
    let full = biderivation_space(&l, BiderMode::Full).unwrap();
    assert_eq!(full.warnings.len(), 1);
}

#[test]
fn aff1_symmetric_and_radical() {
    let l = aff1(Q);
    let sp = biderivation_space(&l, BiderMode::Symmetric).unwrap();
    assert_eq!(sp.dim_solution, 3);
    for d in &sp.basis {
        assert!(is_biderivation(&l, d));
        // all values lie in span{x}
        assert!(d.entries().all(|(_, _, k, _)| k == 0));
        let x = l.basis_vector(0);
        let y = l.basis_vector(1);
        assert!(cyclic_defect(&l, d, &x, &y, &x).unwrap().is_zero());
    }
    let r = symmetric_radical(&l).unwrap();
    assert_eq!(r.radical.dim(), 0);
    assert_eq!(r.witnesses.len(), 2);
    let sigma = AutomorphismMatrix::new(&l, SparseMatrix::from_i64_rows(Q, &[vec![2, 0], vec![0, 1]])).unwrap();
    let props = radical_properties(&l, &r, std::slice::from_ref(&sigma));
    assert!(props.all_pass());
    for d in &sp.basis {
        assert!(sp.contains(&twist(&l, d, &sigma).unwrap()));
    }
    assert!(is_twist_stable(&l, &sp, &sigma).unwrap());
}

#[test]
fn radical_of_sl2_and_abelian() {
    let l = sl2(Q);
    let r = symmetric_radical(&l).unwrap();
    assert_eq!(r.radical.dim(), 3);
    assert!(r.witnesses.is_empty());
    let props = radical_properties(&l, &r, &[AutomorphismMatrix::identity(&l)]);
    assert!(props.all_pass() && props.ideal);
    for n in 1..=3 {
        let ab = LieAlgebra::abelian(Q, n);
        let r = symmetric_radical(&ab).unwrap();
        assert_eq!(r.radical.dim(), 0);
        assert_eq!(r.solutions.dim_solution, n * n * (n + 1) / 2);
        assert!(radical_properties(&ab, &r, &[]).all_pass());
    }
}

#[test]
fn twist_inner_is_fixed() {
    let l = sl2(Q);
    let e = l.basis_vector(0);
    let sigma = crate::chevalley::exp_ad_nilpotent(&l, &e, &s(3)).unwrap();
    let inner = BiderTensor::inner(&l);
    assert_eq!(twist(&l, &inner, &sigma).unwrap(), inner);
    assert_eq!(twist(&l, &inner, &AutomorphismMatrix::identity(&l)).unwrap(), inner);
    let back = twist(&l, &twist(&l, &inner, &sigma).unwrap(), &sigma.inverse()).unwrap();
    assert_eq!(back, inner);
}

#[test]
fn postlie_examples() {
    let rep = postlie_classify(&sl2(Q), false).unwrap();
    assert_eq!(rep.verdict, PostLieVerdict::TrivialOnly);

    let rep = postlie_classify(&LieAlgebra::abelian(Q, 1), false).unwrap();
    assert_eq!(rep.param_dim, 1);
    assert!(matches!(
        rep.verdict,
        PostLieVerdict::NontrivialFound { whole_space: true, .. }
    ));

    let f5 = ScalarDomain::Prime(5);
    let rep = postlie_classify(&aff1(f5), true).unwrap();
    assert!(rep.enumerated);
    let PostLieVerdict::NontrivialFound { points, whole_space } = &rep.verdict else {
        panic!("expected solutions");
    };
    assert!(!whole_space);
    let target: Vec<Scalar> = [0, -1, 0].iter().map(|x| Scalar::from_i64(f5, *x)).collect();
    assert!(points.contains(&target));
    // alpha1 = 0, beta1 in {0, -1}, beta2 free, minus the origin
    assert_eq!(points.len(), 2 * 5 - 1);
    for p in points {
        assert!(is_postlie(&aff1(f5), &rep.tensor_at(f5, p)));
    }

    let l = aff1(Q);
    let alpha1 = BiderTensor::from_entries(Q, 2, 2, BiderMode::Symmetric, [(0, 0, 0, s(1))]).unwrap();
    assert!(!is_postlie(&l, &alpha1));
    assert!(is_postlie(&l, &BiderTensor::zero(Q, 2, BiderMode::Symmetric)));
}

#[test]
fn mode_additivity() {
    for l in [sl2(Q), heisenberg(Q), aff1(Q), LieAlgebra::abelian(Q, 2)] {
        let dim = |m| biderivation_space(&l, m).unwrap().dim_solution;
        assert_eq!(dim(BiderMode::Full), dim(BiderMode::Symmetric) + dim(BiderMode::Skew));
    }
}

#[test]
fn chevalley_rank_two_is_trivial() {
    let fr = classical_algebra(ClassicalType::A, 2, Q).unwrap();
    assert_eq!(
        biderivation_space(&fr.algebra, BiderMode::Symmetric)
            .unwrap()
            .dim_solution,
        0
    );
    let skew = biderivation_space(&fr.algebra, BiderMode::Skew).unwrap();
    assert_eq!(skew.dim_solution, 1);
    assert!(skew.contains(&BiderTensor::inner(&fr.algebra)));
}

#[test]
fn tensor_mode_checks() {
    assert!(BiderTensor::from_entries(Q, 2, 2, BiderMode::Skew, [(0, 0, 1, s(1))]).is_err());
    assert!(BiderTensor::from_entries(Q, 2, 2, BiderMode::Symmetric, [(0, 1, 1, s(1)), (1, 0, 1, s(2))]).is_err());
    let t = BiderTensor::from_entries(Q, 2, 2, BiderMode::Skew, [(0, 1, 1, s(1))]).unwrap();
    assert_eq!(t.get(1, 0, 1), s(-1));
    assert_eq!(BiderTensor::unflatten(&t.flatten(), 2, 2, BiderMode::Skew), t);
}
