//! The verification suite run by `liederive verify`.
//!
//! Each check carries the number of the acceptance criterion it belongs to.
//! A criterion passes when every one of its checks passes.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use liederive::biderive::{
    biderivation_space, cyclic_defect, inner_derivations, is_postlie, is_twist_stable, postlie_classify,
    radical_properties, symmetric_radical, BiderMode, BiderSolutionSpace, BiderTensor, PostLieVerdict,
};
use liederive::chevalley::{
    classical_algebra, exp_ad_nilpotent, is_automorphism, vandermonde_extract, AutomorphismMatrix, ChevalleyError,
    ChevalleyFrame, ClassicalType,
};
use liederive::exactla::{kernel_basis, rref, Scalar, ScalarDomain, SparseMatrix, SparseVec};
use liederive::liecore::{standard, LieAlgebra};

use crate::commands::{self, Task, CHAR_HYPOTHESIS};
use crate::files::{AlgebraFile, FieldSpec};
use crate::report::{ReportFile, TaskResult};
use crate::CliError;

pub const CRITERIA: [(u8, &str); 8] = [
    (
        1,
        "classical algebras: symmetric biderivations vanish, skew ones are inner, radical is everything",
    ),
    (2, "classical algebras: every derivation is inner"),
    (
        3,
        "lemma suite: cyclic identity, twist stability, radical closure and stability",
    ),
    (4, "negative controls: abelian and aff(1) dimensions and radicals"),
    (
        5,
        "Chevalley machinery: nilpotency, exponentials, group law, Vandermonde extraction",
    ),
    (6, "commutative post-Lie classification"),
    (7, "Witt truncation windows"),
    (8, "infrastructure: exact linear algebra, round trips, determinism"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Classical,
    Controls,
    Machinery,
    Postlie,
    Witt,
    Infrastructure,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "classical" => Suite::Classical,
            "controls" => Suite::Controls,
            "machinery" => Suite::Machinery,
            "postlie" => Suite::Postlie,
            "witt" => Suite::Witt,
            "infrastructure" => Suite::Infrastructure,
            "all" => Suite::All,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
    pub skipped: Vec<String>,
}

impl SuiteReport {
    pub fn check(&mut self, criterion: u8, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            criterion,
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `None` if no check of this criterion ran.
    pub fn criterion_passed(&self, criterion: u8) -> Option<bool> {
        let mut it = self.checks.iter().filter(|c| c.criterion == criterion).peekable();
        it.peek()?;
        Some(it.all(|c| c.passed))
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
        self.skipped.extend(other.skipped);
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{}] {}", self.criterion, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub max_rank: usize,
    pub fields: Vec<FieldSpec>,
    pub golden_dir: PathBuf,
    pub bless: bool,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_rank: 2,
            fields: vec![FieldSpec::Rational, FieldSpec::Prime(5), FieldSpec::Prime(7)],
            golden_dir: default_golden_dir(),
            bless: false,
            seed: 0x5eed,
        }
    }
}

pub fn default_golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

/// Refuse fields outside the theorem scope before doing any work.
pub fn check_fields(fields: &[FieldSpec]) -> Result<(), CliError> {
    for f in fields {
        let d = f.domain().map_err(|e| CliError::bad_args(e.message))?;
        if !d.theorem_scope() {
            return Err(CliError::bad_args(format!(
                "field {f} refused: hypothesis violated: {CHAR_HYPOTHESIS}"
            )));
        }
    }
    Ok(())
}

pub fn run(suite: Suite, opts: &Options) -> Result<SuiteReport, CliError> {
    let mut rep = SuiteReport::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Classical {
        check_fields(&opts.fields)?;
        rep.extend(classical(opts.max_rank, &opts.fields));
    }
    if all || suite == Suite::Controls {
        rep.extend(controls());
    }
    if all || suite == Suite::Machinery {
        rep.extend(machinery(opts.seed));
    }
    if all || suite == Suite::Postlie {
        rep.extend(postlie(&opts.golden_dir, opts.bless)?);
    }
    if all || suite == Suite::Witt {
        rep.extend(witt(&opts.golden_dir, opts.bless)?);
    }
    if all || suite == Suite::Infrastructure {
        rep.extend(infrastructure(opts.seed));
    }
    Ok(rep)
}

fn q() -> ScalarDomain {
    ScalarDomain::Rational
}

fn int(domain: ScalarDomain, v: i64) -> Scalar {
    Scalar::from_i64(domain, v)
}

/// Positive-root index of simple root `s`.
fn simple_positive(frame: &ChevalleyFrame, s: usize) -> usize {
    let root = frame.datum.simple_roots[s];
    frame
        .datum
        .positive_roots
        .iter()
        .position(|&r| r == root)
        .expect("simple roots are positive")
}

fn highest_positive(frame: &ChevalleyFrame) -> usize {
    frame
        .datum
        .positive_roots
        .iter()
        .position(|&r| r == frame.datum.highest_root)
        .expect("highest root is positive")
}

/// Three automorphisms of a classical algebra built from root vectors.
fn frame_automorphisms(frame: &ChevalleyFrame) -> Vec<AutomorphismMatrix> {
    let l = &frame.algebra;
    let d = l.domain();
    let s0 = simple_positive(frame, 0);
    let top = highest_positive(frame);
    [
        (frame.e(s0), int(d, 1)),
        (frame.f(s0), int(d, 1)),
        (frame.e(top), int(d, 2)),
    ]
    .iter()
    .map(|(x, lambda)| exp_ad_nilpotent(l, x, lambda).expect("root vectors are ad-nilpotent"))
    .collect()
}

/// Cyclic identity, twist stability and radical properties on one algebra.
fn lemma_checks(
    rep: &mut SuiteReport,
    tag: &str,
    l: &LieAlgebra,
    sym: &BiderSolutionSpace,
    skew: &BiderSolutionSpace,
    autos: &[AutomorphismMatrix],
) {
    let n = l.dim();
    let mut bad_triples = 0usize;
    for d in &sym.basis {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (l.basis_vector(i), l.basis_vector(j), l.basis_vector(k));
                    if !cyclic_defect(l, d, &x, &y, &z).expect("symmetric").is_zero() {
                        bad_triples += 1;
                    }
                }
            }
        }
    }
    rep.check(
        3,
        format!("{tag}: cyclic identity on all symmetric solutions"),
        bad_triples == 0,
        format!("{} solutions, {} nonzero defects", sym.dim_solution, bad_triples),
    );
    let stable = |space: &BiderSolutionSpace| {
        autos
            .iter()
            .filter(|s| is_twist_stable(l, space, s).unwrap_or(false))
            .count()
    };
    let (s_ok, k_ok) = (stable(sym), stable(skew));
    rep.check(
        3,
        format!("{tag}: twist stability"),
        autos.len() >= 3 && s_ok == autos.len() && k_ok == autos.len(),
        format!("symmetric {s_ok}/{0}, skew {k_ok}/{0} automorphisms", autos.len()),
    );
    let r = symmetric_radical(l).expect("mode allowed");
    let props = radical_properties(l, &r, autos);
    rep.check(
        3,
        format!("{tag}: radical closure and stability"),
        props.all_pass() && props.stable.len() >= 3,
        format!(
            "dim {}, subalgebra {}, stable under {}/{} automorphisms, ideal {}",
            r.radical.dim(),
            props.subalgebra,
            props.stable.iter().filter(|s| **s).count(),
            props.stable.len(),
            props.ideal
        ),
    );
}

/// Criteria 1 to 3 on the classical algebras of rank `<= max_rank`.
pub fn classical(max_rank: usize, fields: &[FieldSpec]) -> SuiteReport {
    let mut rep = SuiteReport::default();
    for t in [ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D] {
        for rank in t.min_rank()..=max_rank {
            for &field in fields {
                let tag = format!("{t}{rank} over {field}");
                let domain = match field.domain() {
                    Ok(d) => d,
                    Err(e) => {
                        rep.skipped.push(format!("{tag}: {}", e.message));
                        continue;
                    }
                };
                let frame = match classical_algebra(t, rank, domain) {
                    Ok(f) => f,
                    Err(e @ (ChevalleyError::DegenerateKilling | ChevalleyError::BadCharacteristic(_))) => {
                        rep.skipped.push(commands::chevalley_error(t, rank, field, e).message);
                        continue;
                    }
                    Err(e) => {
                        rep.check(1, format!("{tag}: construction"), false, e.to_string());
                        continue;
                    }
                };
                classical_one(&mut rep, &tag, &frame);
            }
        }
    }
    rep
}

fn classical_one(rep: &mut SuiteReport, tag: &str, frame: &ChevalleyFrame) {
    let l = &frame.algebra;
    let n = l.dim();
    let sym = biderivation_space(l, BiderMode::Symmetric).expect("char is not 2");
    let skew = biderivation_space(l, BiderMode::Skew).expect("char is not 2");
    rep.check(
        1,
        format!("{tag}: symmetric biderivations"),
        sym.dim_solution == 0,
        format!("dim {}", sym.dim_solution),
    );
    let inner = BiderTensor::inner(l);
    rep.check(
        1,
        format!("{tag}: skew biderivations are inner"),
        skew.dim_solution == 1 && skew.contains(&inner),
        format!("dim {}, contains bracket {}", skew.dim_solution, skew.contains(&inner)),
    );
    let rad = symmetric_radical(l).expect("char is not 2");
    rep.check(
        1,
        format!("{tag}: radical is the whole algebra"),
        rad.radical.dim() == n,
        format!("dim {} of {n}", rad.radical.dim()),
    );
    let der = inner_derivations(l);
    rep.check(
        2,
        format!("{tag}: derivations are inner"),
        der.derivation_dim == n && der.outer_dim == 0,
        format!("dim Der {}, outer {}", der.derivation_dim, der.outer_dim),
    );
    lemma_checks(rep, tag, l, &sym, &skew, &frame_automorphisms(frame));
}

fn explicit(l: &LieAlgebra, rows: &[Vec<i64>]) -> AutomorphismMatrix {
    AutomorphismMatrix::new(l, SparseMatrix::from_i64_rows(l.domain(), rows)).expect("automorphism")
}

/// Non-simple control algebras with three automorphisms each.
pub fn control_algebras() -> Vec<(String, LieAlgebra, Vec<AutomorphismMatrix>)> {
    let d = q();
    let mut out = Vec::new();
    let a1 = LieAlgebra::abelian(d, 1);
    let autos = vec![
        explicit(&a1, &[vec![2]]),
        explicit(&a1, &[vec![3]]),
        explicit(&a1, &[vec![-1]]),
    ];
    out.push(("abelian(1)".to_string(), a1, autos));
    let a2 = LieAlgebra::abelian(d, 2);
    let autos = vec![
        explicit(&a2, &[vec![2, 0], vec![0, 1]]),
        explicit(&a2, &[vec![0, 1], vec![1, 0]]),
        explicit(&a2, &[vec![1, 1], vec![0, 1]]),
    ];
    out.push(("abelian(2)".to_string(), a2, autos));
    let a3 = LieAlgebra::abelian(d, 3);
    let autos = vec![
        explicit(&a3, &[vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
        explicit(&a3, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]),
        explicit(&a3, &[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]),
    ];
    out.push(("abelian(3)".to_string(), a3, autos));
    let aff = standard::aff1(d);
    let autos = vec![
        explicit(&aff, &[vec![2, 0], vec![0, 1]]),
        explicit(&aff, &[vec![3, 0], vec![0, 1]]),
        exp_ad_nilpotent(&aff, &aff.basis_vector(0), &int(d, 1)).expect("ad x is nilpotent"),
    ];
    out.push(("aff(1)".to_string(), aff, autos));
    let heis = standard::heisenberg(d);
    let autos = vec![
        explicit(&heis, &[vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]),
        explicit(&heis, &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -1]]),
        exp_ad_nilpotent(&heis, &heis.basis_vector(0), &int(d, 1)).expect("ad x is nilpotent"),
    ];
    out.push(("Heisenberg".to_string(), heis, autos));
    let sl2 = standard::sl2(d);
    let ss = sl2.direct_sum(&sl2).expect("same field");
    let autos = vec![
        AutomorphismMatrix::new(&ss, LieAlgebra::swap_summands(d, 3)).expect("swap"),
        exp_ad_nilpotent(&ss, &ss.basis_vector(0), &int(d, 1)).expect("ad e is nilpotent"),
        exp_ad_nilpotent(&ss, &ss.basis_vector(5), &int(d, 3)).expect("ad f is nilpotent"),
    ];
    out.push(("sl2+sl2".to_string(), ss, autos));
    out
}

/// Criteria 3 and 4 on the non-simple controls.
pub fn controls() -> SuiteReport {
    let mut rep = SuiteReport::default();
    for (tag, l, autos) in control_algebras() {
        let sym = biderivation_space(&l, BiderMode::Symmetric).expect("char 0");
        let skew = biderivation_space(&l, BiderMode::Skew).expect("char 0");
        lemma_checks(&mut rep, &tag, &l, &sym, &skew, &autos);
        let n = l.dim();
        let expected = if l.is_abelian() {
            Some(n * n * (n + 1) / 2)
        } else if tag == "aff(1)" {
            Some(3)
        } else {
            None
        };
        if let Some(want) = expected {
            let rad = symmetric_radical(&l).expect("char 0");
            rep.check(
                4,
                format!("{tag}: symmetric biderivations and radical"),
                sym.dim_solution == want && rad.radical.dim() == 0,
                format!(
                    "dim {} (expected {want}), radical dim {}",
                    sym.dim_solution,
                    rad.radical.dim()
                ),
            );
        }
    }
    rep
}

fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let num = int(q(), rng.gen_range(-9..=9));
    let den = int(q(), rng.gen_range(1..=5));
    num.checked_div(&den).expect("nonzero denominator")
}

fn random_vec(rng: &mut ChaCha8Rng, domain: ScalarDomain, n: usize) -> SparseVec {
    let vals: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
    SparseVec::from_i64s(domain, &vals)
}

/// Criterion 5: nilpotency of root vectors, exponentials, group law and
/// Vandermonde extraction.
pub fn machinery(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Scalar, Scalar)> = (0..5)
        .map(|_| (random_rational(&mut rng), random_rational(&mut rng)))
        .collect();
    for (t, rank) in [(ClassicalType::A, 2), (ClassicalType::B, 2)] {
        let tag = format!("{t}{rank} over Q");
        let frame = classical_algebra(t, rank, q()).expect("in scope");
        let l = &frame.algebra;
        let p = frame.datum.num_positive();
        let mut nilpotent = 0;
        let mut automorphic = 0;
        let mut group_law = 0;
        for k in 0..p {
            let e = frame.e(k);
            let ad = l.ad_matrix(&e).expect("sized");
            if ad.mul(&ad).mul(&ad).mul(&ad).is_zero() {
                nilpotent += 1;
            }
            if exp_ad_nilpotent(l, &e, &int(q(), 1)).is_ok_and(|m| is_automorphism(l, m.matrix())) {
                automorphic += 1;
            }
            let exp = |lambda: &Scalar| exp_ad_nilpotent(l, &e, lambda).expect("nilpotent");
            if pairs
                .iter()
                .all(|(a, b)| exp(a).compose(&exp(b)).matrix() == exp(&(a + b)).matrix())
            {
                group_law += 1;
            }
        }
        rep.check(
            5,
            format!("{tag}: (ad e)^4 = 0"),
            nilpotent == p,
            format!("{nilpotent}/{p} positive roots"),
        );
        rep.check(
            5,
            format!("{tag}: exp(ad e) is an automorphism"),
            automorphic == p,
            format!("{automorphic}/{p} positive roots"),
        );
        rep.check(
            5,
            format!("{tag}: one-parameter group law"),
            group_law == p,
            format!("{group_law}/{p} positive roots, {} parameter pairs", pairs.len()),
        );
    }
    for domain in [q(), ScalarDomain::Prime(7)] {
        let mut recovered = 0;
        for degree in 0..=4usize {
            let planted: Vec<SparseVec> = (0..=degree).map(|_| random_vec(&mut rng, domain, 8)).collect();
            let samples: Vec<(Scalar, SparseVec)> = (0..degree as i64 + 2)
                .map(|s| {
                    let lambda = int(domain, s);
                    let mut v = SparseVec::zero(domain, 8);
                    for (m, u) in planted.iter().enumerate() {
                        v = v.add(&u.scale(&lambda.pow(m as u32)));
                    }
                    (lambda, v)
                })
                .collect();
            if vandermonde_extract(&samples, degree).is_ok_and(|c| c == planted) {
                recovered += 1;
            }
        }
        rep.check(
            5,
            format!("Vandermonde extraction over {domain}"),
            recovered == 5,
            format!("{recovered}/5 planted degrees 0..4 recovered"),
        );
    }
    rep
}

fn golden_check(
    rep: &mut SuiteReport,
    criterion: u8,
    golden_dir: &Path,
    name: &str,
    report: &ReportFile,
    bless: bool,
) -> Result<(), CliError> {
    let path = golden_dir.join(name);
    let text = report.canonical_text();
    if bless {
        std::fs::create_dir_all(golden_dir).map_err(|e| CliError::io(golden_dir, e))?;
        std::fs::write(&path, &text).map_err(|e| CliError::io(&path, e))?;
        rep.check(criterion, format!("golden {name}"), true, "blessed");
        return Ok(());
    }
    match std::fs::read_to_string(&path) {
        Ok(pinned) => rep.check(
            criterion,
            format!("golden {name}"),
            pinned == text,
            if pinned == text {
                "matches"
            } else {
                "differs from pinned file"
            },
        ),
        Err(e) => rep.check(
            criterion,
            format!("golden {name}"),
            false,
            format!("{}: {e}", path.display()),
        ),
    }
    Ok(())
}

/// Criterion 6.
pub fn postlie(golden_dir: &Path, bless: bool) -> Result<SuiteReport, CliError> {
    let mut rep = SuiteReport::default();
    for (t, rank) in [(ClassicalType::A, 1), (ClassicalType::A, 2)] {
        let frame = classical_algebra(t, rank, q()).expect("in scope");
        let r = postlie_classify(&frame.algebra, true).expect("char 0");
        rep.check(
            6,
            format!("{t}{rank} over Q: only the trivial product"),
            r.verdict == PostLieVerdict::TrivialOnly,
            format!("{:?}", r.verdict),
        );
    }
    let d = ScalarDomain::Prime(5);
    let aff = standard::aff1(d);
    let r = postlie_classify(&aff, true).expect("char 5");
    let target: Vec<Scalar> = [0, -1, 0].iter().map(|&v| int(d, v)).collect();
    let (found, all_valid, count) = match &r.verdict {
        PostLieVerdict::NontrivialFound { points, .. } => (
            points.contains(&target),
            points.iter().all(|p| is_postlie(&aff, &r.tensor_at(d, p))),
            points.len(),
        ),
        _ => (false, false, 0),
    };
    rep.check(
        6,
        "aff(1) over F5: nontrivial product (0, -1, 0)",
        r.enumerated && found && all_valid,
        format!("{count} nonzero points, all satisfy the identity: {all_valid}"),
    );
    let report = commands::solve(&aff, Task::Postlie)?;
    golden_check(&mut rep, 6, golden_dir, "postlie_aff1_F5.json", &report, bless)?;
    Ok(rep)
}

/// The two default windows and their time budgets in seconds.
pub const WITT_WINDOWS: [(usize, u32, u32, u64); 2] = [(1, 7, 3, 60), (2, 4, 2, 300)];

pub fn witt_golden_name(n: usize, cap: u32, inner: u32) -> String {
    format!("witt_{n}_{cap}_{inner}_symmetric.json")
}

/// Criterion 7.
pub fn witt(golden_dir: &Path, bless: bool) -> Result<SuiteReport, CliError> {
    let mut rep = SuiteReport::default();
    for (n, cap, inner, budget) in WITT_WINDOWS {
        let tag = format!("W{n} window N={cap}, N_in={inner}");
        let start = Instant::now();
        let skew = commands::witt(n, cap, inner, BiderMode::Skew)?;
        let sym = commands::witt(n, cap, inner, BiderMode::Symmetric)?;
        let secs = start.elapsed().as_secs();
        if let TaskResult::Witt(w) = &skew.results {
            rep.check(
                7,
                format!("{tag}: skew solutions contain the restricted bracket"),
                w.contains_inner == Some(true),
                format!("dim {}", w.dim),
            );
        }
        golden_check(&mut rep, 7, golden_dir, &witt_golden_name(n, cap, inner), &sym, bless)?;
        if let TaskResult::Witt(w) = &sym.results {
            let offending: Vec<String> = w
                .generators
                .iter()
                .filter(|g| g.degree <= 1 && g.status == "non_vanishing")
                .map(|g| format!("{} on {}", g.label, g.non_vanishing.join(",")))
                .collect();
            rep.check(
                7,
                format!("{tag}: interior rows of degree 0 and 1 generators vanish"),
                offending.is_empty(),
                if offending.is_empty() {
                    format!("symmetric dim {}", w.dim)
                } else {
                    format!("symmetric dim {}; nonzero: {}", w.dim, offending.join("; "))
                },
            );
        }
        rep.check(
            7,
            format!("{tag}: runtime"),
            secs < budget,
            format!("{secs} s (budget {budget} s)"),
        );
    }
    Ok(rep)
}

fn random_sparse(rng: &mut ChaCha8Rng, domain: ScalarDomain) -> SparseMatrix {
    let rows = rng.gen_range(1..=12);
    let cols = rng.gen_range(1..=12);
    let density: f64 = rng.gen_range(0.05..0.6);
    let vals: Vec<Vec<i64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.gen_bool(density) {
                        rng.gen_range(-7..=7)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    SparseMatrix::from_i64_rows(domain, &vals)
}

/// Kernel, rank-nullity and idempotence on one matrix.
pub fn rref_properties(m: &SparseMatrix) -> bool {
    let r = rref(m);
    let kernel = kernel_basis(m);
    kernel.iter().all(|v| m.mul_vec(v).is_zero()) && r.rank + kernel.len() == m.n_cols() && rref(&r.matrix) == r
}

/// Run `f` on a pool of `threads` workers.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Round trip of a file through load and save.
pub fn round_trips(file: &AlgebraFile) -> bool {
    let text = file.to_text();
    let Ok(parsed) = AlgebraFile::from_text(&text) else {
        return false;
    };
    let Ok(loaded) = parsed.to_algebra() else {
        return false;
    };
    AlgebraFile::from_algebra(&loaded.algebra, loaded.frame.as_ref()).to_text() == text
}

/// Criterion 8, minus the property tests that live in the test suites.
pub fn infrastructure(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x8);
    for domain in [
        q(),
        ScalarDomain::Prime(5),
        ScalarDomain::Prime(7),
        ScalarDomain::Prime(2_147_483_647),
    ] {
        let ok = (0..100)
            .filter(|_| rref_properties(&random_sparse(&mut rng, domain)))
            .count();
        rep.check(
            8,
            format!("RREF and kernel properties over {domain}"),
            ok == 100,
            format!("{ok}/100 random matrices"),
        );
    }
    let mut files = Vec::new();
    for (t, rank, field) in [
        (ClassicalType::A, 1, FieldSpec::Rational),
        (ClassicalType::A, 2, FieldSpec::Prime(5)),
        (ClassicalType::B, 2, FieldSpec::Prime(7)),
        (ClassicalType::C, 3, FieldSpec::Rational),
    ] {
        files.push((
            format!("{t}{rank} over {field}"),
            commands::build(t, rank, field).expect("in scope"),
        ));
    }
    for (tag, l, _) in control_algebras() {
        files.push((tag, AlgebraFile::from_algebra(&l, None)));
    }
    let ok = files.iter().filter(|(_, f)| round_trips(f)).count();
    rep.check(
        8,
        "algebra file round trip is byte-identical",
        ok == files.len(),
        format!("{ok}/{} files", files.len()),
    );
    let sl2 = standard::sl2(q());
    let a2 = classical_algebra(ClassicalType::A, 2, ScalarDomain::Prime(7))
        .expect("in scope")
        .algebra;
    let jobs: Vec<(String, Box<dyn Fn() -> ReportFile + Sync>)> = vec![
        (
            "sl2 bider:skew".into(),
            Box::new(|| commands::solve(&sl2, Task::Bider(BiderMode::Skew)).expect("solve")),
        ),
        (
            "A2/F7 radical".into(),
            Box::new(|| commands::solve(&a2, Task::Radical).expect("solve")),
        ),
        (
            "A2/F7 der".into(),
            Box::new(|| commands::solve(&a2, Task::Der).expect("solve")),
        ),
        (
            "W1 N=5 N_in=2 symmetric".into(),
            Box::new(|| commands::witt(1, 5, 2, BiderMode::Symmetric).expect("witt")),
        ),
    ];
    let mut same = 0;
    for (_, job) in &jobs {
        let hashes: Vec<String> = [1, 2, 4]
            .iter()
            .map(|&t| with_threads(t, || job().determinism_hash()))
            .collect();
        if hashes.windows(2).all(|w| w[0] == w[1]) {
            same += 1;
        }
    }
    rep.check(
        8,
        "reports are identical across 1, 2 and 4 threads",
        same == jobs.len(),
        format!(
            "{same}/{} reports ({})",
            jobs.len(),
            jobs.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", ")
        ),
    );
    rep
}
