use std::collections::{BTreeMap, HashSet};
use std::fmt;

use super::{biderivation_space, is_biderivation, BiderError, BiderMode, BiderSolutionSpace, BiderTensor};
use crate::exactla::{Scalar, ScalarDomain, SparseVec};
use crate::liecore::LieAlgebra;

/// Linear and quadratic terms of one equation, with residue coefficients.
type ResidueEquation = (Vec<(usize, u64)>, Vec<(usize, usize, u64)>);

/// Largest parameter space searched exhaustively.
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

/// Points probed when exhaustive search is unavailable: the full grid
/// `{-1, 0, 1}^m` up to this many parameters, signed unit vectors beyond.
const GRID_PARAMS: usize = 8;

/// A polynomial of degree at most two without constant term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticPoly {
    /// `(s, c)`: `c * t_s`, sorted by `s`.
    pub linear: Vec<(usize, Scalar)>,
    /// `(s, u, c)` with `s <= u`: `c * t_s * t_u`, sorted.
    pub quadratic: Vec<(usize, usize, Scalar)>,
}

impl QuadraticPoly {
    pub fn is_zero(&self) -> bool {
        self.linear.is_empty() && self.quadratic.is_empty()
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let domain = point.first().map(Scalar::domain).unwrap_or(ScalarDomain::Rational);
        let mut acc = Scalar::zero(domain);
        for (s, c) in &self.linear {
            acc = &acc + &(c * &point[*s]);
        }
        for (s, u, c) in &self.quadratic {
            acc = &acc + &(&(c * &point[*s]) * &point[*u]);
        }
        acc
    }

    fn leading(&self) -> Option<&Scalar> {
        self.linear
            .first()
            .map(|(_, c)| c)
            .or_else(|| self.quadratic.first().map(|(_, _, c)| c))
    }

    fn scaled(&self, s: &Scalar) -> QuadraticPoly {
        QuadraticPoly {
            linear: self.linear.iter().map(|(i, c)| (*i, c * s)).collect(),
            quadratic: self.quadratic.iter().map(|(i, j, c)| (*i, *j, c * s)).collect(),
        }
    }
}

impl fmt::Display for QuadraticPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .linear
            .iter()
            .map(|(s, c)| format!("{c}*t{s}"))
            .chain(self.quadratic.iter().map(|(s, u, c)| format!("{c}*t{s}*t{u}")))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PostLieVerdict {
    TrivialOnly,
    /// Nonzero solutions found. `whole_space` is set when every parameter
    /// point is a solution.
    NontrivialFound {
        points: Vec<Vec<Scalar>>,
        whole_space: bool,
    },
    /// The system was emitted but not decided.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostLieReport {
    pub param_dim: usize,
    /// Parametrization: the product is `sum_s t_s * basis[s]`.
    pub solutions: BiderSolutionSpace,
    pub quadratic_system: Vec<QuadraticPoly>,
    pub verdict: PostLieVerdict,
    /// Whether the verdict came from exhaustive enumeration.
    pub enumerated: bool,
}

impl PostLieReport {
    pub fn tensor_at(&self, domain: ScalarDomain, point: &[Scalar]) -> BiderTensor {
        self.solutions.combination(domain, point)
    }
}

/// `[x,y].z - x.(y.z) + y.(x.z)` with `u.v = delta(u, v)`.
fn residual(l: &LieAlgebra, d: &BiderTensor, a: usize, b: usize, c: usize) -> SparseVec {
    let (ba, bb, bc) = (l.basis_vector(a), l.basis_vector(b), l.basis_vector(c));
    let ap = |x: &SparseVec, y: &SparseVec| d.apply(x, y).expect("sized");
    ap(l.basis_bracket(a, b), &bc)
        .sub(&ap(&ba, &ap(&bb, &bc)))
        .add(&ap(&bb, &ap(&ba, &bc)))
}

/// True iff `d` is a symmetric biderivation whose product satisfies the
/// post-Lie identity on all basis triples.
pub fn is_postlie(l: &LieAlgebra, d: &BiderTensor) -> bool {
    if d.mode() != BiderMode::Symmetric || !is_biderivation(l, d) {
        return false;
    }
    let n = l.dim();
    (0..n).all(|a| (a + 1..n).all(|b| (0..n).all(|c| residual(l, d, a, b, c).is_zero())))
}

/// Residual equations in the coordinates of the symmetric solution basis.
fn quadratic_system(l: &LieAlgebra, space: &BiderSolutionSpace) -> Vec<QuadraticPoly> {
    let n = l.dim();
    let m = space.basis.len();
    let basis = &space.basis;
    let ap = |d: &BiderTensor, x: &SparseVec, y: &SparseVec| d.apply(x, y).expect("sized");
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in 0..n {
                let (ba, bb, bc) = (l.basis_vector(a), l.basis_vector(b), l.basis_vector(c));
                let ab = l.basis_bracket(a, b);
                // coordinate -> terms
                let mut lin: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
                let mut quad: BTreeMap<usize, BTreeMap<(usize, usize), Scalar>> = BTreeMap::new();
                for (s, d) in basis.iter().enumerate() {
                    for (k, x) in ap(d, ab, &bc).entries() {
                        let e = lin
                            .entry(*k)
                            .or_default()
                            .entry(s)
                            .or_insert_with(|| Scalar::zero(l.domain()));
                        *e = &*e + x;
                    }
                }
                for (u, du) in basis.iter().enumerate() {
                    let yz = ap(du, &bb, &bc);
                    let xz = ap(du, &ba, &bc);
                    for (s, ds) in basis.iter().enumerate() {
                        let v = ap(ds, &bb, &xz).sub(&ap(ds, &ba, &yz));
                        for (k, x) in v.entries() {
                            let key = (s.min(u), s.max(u));
                            let e = quad
                                .entry(*k)
                                .or_default()
                                .entry(key)
                                .or_insert_with(|| Scalar::zero(l.domain()));
                            *e = &*e + x;
                        }
                    }
                }
                let coords: Vec<usize> = lin
                    .keys()
                    .chain(quad.keys())
                    .copied()
                    .collect::<std::collections::BTreeSet<_>>()
                    .into_iter()
                    .collect();
                for k in coords {
                    let p = QuadraticPoly {
                        linear: lin
                            .remove(&k)
                            .unwrap_or_default()
                            .into_iter()
                            .filter(|(_, c)| !c.is_zero())
                            .collect(),
                        quadratic: quad
                            .remove(&k)
                            .unwrap_or_default()
                            .into_iter()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|((s, u), c)| (s, u, c))
                            .collect(),
                    };
                    if p.is_zero() {
                        continue;
                    }
                    let p = p.scaled(&p.leading().and_then(Scalar::inv).expect("nonzero"));
                    if seen.insert(p.clone()) {
                        out.push(p);
                    }
                }
            }
        }
    }
    debug_assert!(out.iter().all(|p| p.linear.iter().all(|(s, _)| *s < m)));
    out
}

/// Exhaustive search over `F_p^m`, all points satisfying every equation.
fn enumerate(system: &[QuadraticPoly], p: u32, m: usize) -> Vec<Vec<u32>> {
    let p64 = p as u64;
    let residue = |c: &Scalar| match c {
        Scalar::Residue { value, .. } => *value as u64,
        Scalar::Rational(_) => unreachable!("prime field"),
    };
    let eqs: Vec<ResidueEquation> = system
        .iter()
        .map(|q| {
            (
                q.linear.iter().map(|(s, c)| (*s, residue(c))).collect(),
                q.quadratic.iter().map(|(s, u, c)| (*s, *u, residue(c))).collect(),
            )
        })
        .collect();
    let total = p64.pow(m as u32);
    let mut out = Vec::new();
    let mut point = vec![0u64; m];
    for idx in 0..total {
        let mut r = idx;
        for x in point.iter_mut() {
            *x = r % p64;
            r /= p64;
        }
        let ok = eqs.iter().all(|(lin, quad)| {
            let mut acc = 0u64;
            for (s, c) in lin {
                acc = (acc + c * point[*s]) % p64;
            }
            for (s, u, c) in quad {
                acc = (acc + c * point[*s] % p64 * point[*u]) % p64;
            }
            acc == 0
        });
        if ok {
            out.push(point.iter().map(|x| *x as u32).collect());
        }
    }
    out.sort();
    out
}

fn probe_points(domain: ScalarDomain, m: usize) -> Vec<Vec<Scalar>> {
    let vals = [0i64, 1, -1];
    let mut out = Vec::new();
    if m <= GRID_PARAMS {
        let total = 3usize.pow(m as u32);
        for idx in 1..total {
            let mut r = idx;
            let mut pt = Vec::with_capacity(m);
            for _ in 0..m {
                pt.push(Scalar::from_i64(domain, vals[r % 3]));
                r /= 3;
            }
            out.push(pt);
        }
    } else {
        for s in 0..m {
            for sign in [1, -1] {
                let mut pt = vec![Scalar::zero(domain); m];
                pt[s] = Scalar::from_i64(domain, sign);
                out.push(pt);
            }
        }
    }
    out
}

/// Classify commutative post-Lie products on `l`.
pub fn postlie_classify(l: &LieAlgebra, enumerate_over_field: bool) -> Result<PostLieReport, BiderError> {
    let domain = l.domain();
    let solutions = biderivation_space(l, BiderMode::Symmetric)?;
    let m = solutions.dim_solution;
    if m == 0 {
        return Ok(PostLieReport {
            param_dim: 0,
            solutions,
            quadratic_system: Vec::new(),
            verdict: PostLieVerdict::TrivialOnly,
            enumerated: false,
        });
    }
    let system = quadratic_system(l, &solutions);
    let searchable = match domain {
        ScalarDomain::Prime(p) => (p as u64).checked_pow(m as u32).is_some_and(|t| t <= ENUMERATION_LIMIT),
        ScalarDomain::Rational => false,
    };
    let (verdict, enumerated) = if enumerate_over_field && searchable {
        let p = domain.characteristic();
        let found = enumerate(&system, p, m);
        let whole_space = found.len() as u64 == (p as u64).pow(m as u32);
        let points: Vec<Vec<Scalar>> = found
            .into_iter()
            .filter(|pt| pt.iter().any(|x| *x != 0))
            .map(|pt| pt.into_iter().map(|x| Scalar::from_i64(domain, x as i64)).collect())
            .collect();
        let verdict = if points.is_empty() {
            PostLieVerdict::TrivialOnly
        } else {
            PostLieVerdict::NontrivialFound { points, whole_space }
        };
        (verdict, true)
    } else if system.is_empty() {
        let points = (0..m)
            .map(|s| (0..m).map(|t| Scalar::from_i64(domain, (s == t) as i64)).collect())
            .collect();
        (
            PostLieVerdict::NontrivialFound {
                points,
                whole_space: true,
            },
            false,
        )
    } else {
        let points: Vec<Vec<Scalar>> = probe_points(domain, m)
            .into_iter()
            .filter(|pt| system.iter().all(|q| q.eval(pt).is_zero()))
            .collect();
        let verdict = if points.is_empty() {
            PostLieVerdict::Undecided
        } else {
            PostLieVerdict::NontrivialFound {
                points,
                whole_space: false,
            }
        };
        (verdict, false)
    };
    Ok(PostLieReport {
        param_dim: m,
        solutions,
        quadratic_system: system,
        verdict,
        enumerated,
    })
}
