use std::fmt;
use std::str::FromStr;

use super::ChevalleyError;

/// Classical Cartan type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalType {
    A,
    B,
    C,
    D,
}

impl ClassicalType {
    pub fn min_rank(self) -> usize {
        match self {
            ClassicalType::A => 1,
            ClassicalType::B | ClassicalType::C => 2,
            ClassicalType::D => 3,
        }
    }

    /// Dimension of the simple algebra of this type and rank.
    pub fn algebra_dim(self, rank: usize) -> usize {
        let n = rank;
        match self {
            ClassicalType::A => (n + 1) * (n + 1) - 1,
            ClassicalType::B | ClassicalType::C => n * (2 * n + 1),
            ClassicalType::D => n * (2 * n - 1),
        }
    }

    pub(crate) fn check_rank(self, rank: usize) -> Result<(), ChevalleyError> {
        if rank < self.min_rank() {
            return Err(ChevalleyError::RankOutOfRange {
                type_letter: self,
                rank,
            });
        }
        Ok(())
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            ClassicalType::A => "A",
            ClassicalType::B => "B",
            ClassicalType::C => "C",
            ClassicalType::D => "D",
        };
        f.write_str(c)
    }
}

impl FromStr for ClassicalType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(ClassicalType::A),
            "B" | "b" => Ok(ClassicalType::B),
            "C" | "c" => Ok(ClassicalType::C),
            "D" | "d" => Ok(ClassicalType::D),
            other => Err(format!("unknown classical type {other:?}")),
        }
    }
}

/// Root system of a classical type in epsilon coordinates.
///
/// `roots` lists the positive roots first (by height, then by simple-root
/// coordinates in decreasing lexicographic order) followed by their
/// negatives in the same order, so `roots[i + P] = -roots[i]` with `P` the
/// number of positive roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub type_letter: ClassicalType,
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<usize>,
    pub simple_roots: Vec<usize>,
    pub highest_root: usize,
    pub long_roots: Vec<usize>,
    /// Coordinates of each root in the simple-root basis.
    pub simple_coords: Vec<Vec<i64>>,
}

impl RootDatum {
    pub fn ambient_dim(&self) -> usize {
        match self.type_letter {
            ClassicalType::A => self.rank + 1,
            _ => self.rank,
        }
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn find(&self, root: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == root)
    }

    pub fn is_root(&self, root: &[i64]) -> bool {
        self.find(root).is_some()
    }

    pub fn height(&self, idx: usize) -> i64 {
        self.simple_coords[idx].iter().sum()
    }

    pub fn is_long(&self, idx: usize) -> bool {
        self.long_roots.binary_search(&idx).is_ok()
    }

    /// Negative of root `idx`.
    pub fn negative(&self, idx: usize) -> usize {
        let p = self.num_positive();
        if idx < p {
            idx + p
        } else {
            idx - p
        }
    }
}

fn unit(len: usize, i: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; len];
    v[i] = s;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Express `v` in terms of the simple roots. The simple roots of the
/// classical types are unitriangular against the standard basis up to the
/// last one, so back substitution over the integers suffices.
fn simple_coordinates(t: ClassicalType, n: usize, v: &[i64]) -> Vec<i64> {
    // alpha_i = e_i - e_{i+1} for i < n-1 (all i < n for A)
    let mut c = vec![0i64; n];
    match t {
        ClassicalType::A => {
            // v = sum c_i (e_i - e_{i+1}) => c_i = v_0 + ... + v_i
            let mut acc = 0;
            for i in 0..n {
                acc += v[i];
                c[i] = acc;
            }
        }
        ClassicalType::B => {
            // alpha_n = e_n; c_i = v_0 + .. + v_i for i < n-1, c_{n-1} = sum all
            let mut acc = 0;
            for i in 0..n {
                acc += v[i];
                c[i] = acc;
            }
        }
        ClassicalType::C => {
            // alpha_n = 2 e_n; c_{n-1} = (sum all) / 2
            let mut acc = 0;
            for i in 0..n - 1 {
                acc += v[i];
                c[i] = acc;
            }
            acc += v[n - 1];
            debug_assert!(acc % 2 == 0);
            c[n - 1] = acc / 2;
        }
        ClassicalType::D => {
            // alpha_{n-1} = e_{n-1} + e_n, alpha_{n-2} = e_{n-2} - e_{n-1}
            // partial sums s_i = v_0+..+v_i; c_i = s_i (i < n-2),
            // c_{n-2} = (s_{n-2} - v_{n-1}) / 2, c_{n-1} = (s_{n-2} + v_{n-1}) / 2
            let mut acc = 0;
            for i in 0..n - 2 {
                acc += v[i];
                c[i] = acc;
            }
            let s = acc + v[n - 2];
            let last = v[n - 1];
            debug_assert!((s - last) % 2 == 0);
            c[n - 2] = (s - last) / 2;
            c[n - 1] = (s + last) / 2;
        }
    }
    c
}

/// Root datum of a classical type.
pub fn root_system(t: ClassicalType, rank: usize) -> Result<RootDatum, ChevalleyError> {
    t.check_rank(rank)?;
    let n = rank;
    let amb = if t == ClassicalType::A { n + 1 } else { n };
    let mut positive: Vec<Vec<i64>> = Vec::new();
    for i in 0..amb {
        for j in i + 1..amb {
            positive.push(sub(&unit(amb, i, 1), &unit(amb, j, 1)));
            if t != ClassicalType::A {
                positive.push(add(&unit(amb, i, 1), &unit(amb, j, 1)));
            }
        }
        match t {
            ClassicalType::B => positive.push(unit(amb, i, 1)),
            ClassicalType::C => positive.push(unit(amb, i, 2)),
            _ => {}
        }
    }
    let mut with_coords: Vec<(Vec<i64>, Vec<i64>)> = positive
        .into_iter()
        .map(|r| {
            let c = simple_coordinates(t, n, &r);
            (r, c)
        })
        .collect();
    with_coords.sort_by(|(_, a), (_, b)| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let p = with_coords.len();
    let mut roots: Vec<Vec<i64>> = with_coords.iter().map(|(r, _)| r.clone()).collect();
    let mut simple_coords: Vec<Vec<i64>> = with_coords.iter().map(|(_, c)| c.clone()).collect();
    for k in 0..p {
        roots.push(roots[k].iter().map(|x| -x).collect());
        simple_coords.push(simple_coords[k].iter().map(|x| -x).collect());
    }
    let simple_roots: Vec<usize> = (0..n)
        .map(|i| {
            let target = unit(n, i, 1);
            simple_coords
                .iter()
                .position(|c| *c == target)
                .expect("simple root present")
        })
        .collect();
    let highest_root = (0..p)
        .max_by(|&a, &b| simple_coords[a].cmp(&simple_coords[b]))
        .expect("nonempty");
    let norm = |r: &Vec<i64>| r.iter().map(|x| x * x).sum::<i64>();
    let max_norm = roots.iter().map(norm).max().unwrap_or(0);
    let long_roots = (0..roots.len()).filter(|&i| norm(&roots[i]) == max_norm).collect();
    Ok(RootDatum {
        type_letter: t,
        rank: n,
        roots,
        positive_roots: (0..p).collect(),
        simple_roots,
        highest_root,
        long_roots,
        simple_coords,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2() {
        let d = root_system(ClassicalType::A, 2).unwrap();
        assert_eq!(d.roots.len(), 6);
        assert_eq!(d.num_positive(), 3);
        assert_eq!(d.long_roots.len(), 6);
        assert_eq!(d.simple_coords[d.highest_root], vec![1, 1]);
        assert_eq!(d.roots[d.highest_root], vec![1, 0, -1]);
    }

    #[test]
    fn b2() {
        let d = root_system(ClassicalType::B, 2).unwrap();
        assert_eq!(d.roots.len(), 8);
        assert_eq!(d.num_positive(), 4);
        let mut long: Vec<Vec<i64>> = d.long_roots.iter().map(|&i| d.roots[i].clone()).collect();
        long.sort();
        assert_eq!(long, vec![vec![-1, -1], vec![-1, 1], vec![1, -1], vec![1, 1]]);
        assert_eq!(d.roots[d.highest_root], vec![1, 1]);
    }

    #[test]
    fn c2_highest_is_long() {
        let d = root_system(ClassicalType::C, 2).unwrap();
        assert_eq!(d.roots[d.highest_root], vec![2, 0]);
        assert!(d.is_long(d.highest_root));
    }

    #[test]
    fn d3_count_matches_a3() {
        assert_eq!(root_system(ClassicalType::D, 3).unwrap().roots.len(), 12);
        assert_eq!(root_system(ClassicalType::A, 3).unwrap().roots.len(), 12);
    }

    #[test]
    fn rank_bounds() {
        assert!(root_system(ClassicalType::A, 0).is_err());
        assert!(root_system(ClassicalType::B, 1).is_err());
        assert!(root_system(ClassicalType::C, 1).is_err());
        assert!(root_system(ClassicalType::D, 2).is_err());
    }

    #[test]
    fn classical_counts_and_closure() {
        for (t, lo) in [
            (ClassicalType::A, 1),
            (ClassicalType::B, 2),
            (ClassicalType::C, 2),
            (ClassicalType::D, 3),
        ] {
            for n in lo..lo + 4 {
                let d = root_system(t, n).unwrap();
                let expected = match t {
                    ClassicalType::A => n * (n + 1),
                    ClassicalType::B | ClassicalType::C => 2 * n * n,
                    ClassicalType::D => 2 * n * (n - 1),
                };
                assert_eq!(d.roots.len(), expected, "{t}{n}");
                assert_eq!(d.roots.len() + n, t.algebra_dim(n));
                assert!(d.is_long(d.highest_root));
                for (i, c) in d.simple_coords.iter().enumerate() {
                    let sign = if i < d.num_positive() { 1 } else { -1 };
                    assert!(c.iter().all(|x| x * sign >= 0), "{t}{n} root {i}");
                }
                // highest root dominates every positive root coefficientwise
                let top = &d.simple_coords[d.highest_root];
                for c in &d.simple_coords[..d.num_positive()] {
                    assert!(c.iter().zip(top).all(|(a, b)| a <= b));
                }
            }
        }
    }
}
