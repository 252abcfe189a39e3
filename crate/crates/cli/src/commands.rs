use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use liederive::biderive::{
    biderivation_space, derivation_space, inner_derivations, postlie_classify, radical_properties, symmetric_radical,
    BiderError, BiderMode, BiderTensor,
};
use liederive::chevalley::{classical_algebra, ChevalleyError, ClassicalType};
use liederive::liecore::LieAlgebra;
use liederive::witt::{restricted_inner, truncated_biderivation_space, witt_truncation, WittError};

use crate::files::{AlgebraFile, FieldSpec, LoadedAlgebra};
use crate::report::{self, ReportFile, TaskResult};
use crate::CliError;

pub const CHAR_HYPOTHESIS: &str = "char F ≠ 2, 3";
pub const KILLING_HYPOTHESIS: &str = "non-degenerate Killing form";

/// What `solve` computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    Der,
    Bider(BiderMode),
    Radical,
    Postlie,
}

impl FromStr for Task {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "der" => Ok(Task::Der),
            "radical" => Ok(Task::Radical),
            "postlie" => Ok(Task::Postlie),
            _ => match s.strip_prefix("bider:") {
                Some(mode) => mode.parse().map(Task::Bider),
                None => Err(format!(
                    "unknown task {s:?} (expected der, bider:full|sym|skew, radical or postlie)"
                )),
            },
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Task::Der => f.write_str("der"),
            Task::Bider(m) => write!(f, "bider:{m}"),
            Task::Radical => f.write_str("radical"),
            Task::Postlie => f.write_str("postlie"),
        }
    }
}

pub fn chevalley_error(t: ClassicalType, rank: usize, field: FieldSpec, e: ChevalleyError) -> CliError {
    match e {
        ChevalleyError::BadCharacteristic(p) => CliError::bad_args(format!(
            "{t}{rank} over {field}: hypothesis violated: {CHAR_HYPOTHESIS} (characteristic {p})"
        )),
        ChevalleyError::DegenerateKilling => CliError::bad_args(format!(
            "{t}{rank} over {field}: hypothesis violated: {KILLING_HYPOTHESIS}"
        )),
        other => CliError::bad_args(format!("{t}{rank} over {field}: {other}")),
    }
}

fn bider_error(e: BiderError) -> CliError {
    match e {
        BiderError::ModesCoincide => CliError::bad_args(format!("{e}; use bider:full")),
        other => CliError::invalid(other.to_string()),
    }
}

/// Build a classical algebra file with its frame block.
pub fn build(t: ClassicalType, rank: usize, field: FieldSpec) -> Result<AlgebraFile, CliError> {
    let domain = field.domain().map_err(|e| CliError::bad_args(e.message))?;
    let frame = classical_algebra(t, rank, domain).map_err(|e| chevalley_error(t, rank, field, e))?;
    Ok(AlgebraFile::from_algebra(&frame.algebra, Some(&frame)))
}

/// Load an algebra file and check the Jacobi identity, plus the frame
/// relations `[e_i, f_i] = h_i` when a frame is present.
pub fn load_valid(file: &AlgebraFile) -> Result<LoadedAlgebra, CliError> {
    let loaded = file.to_algebra()?;
    let l = &loaded.algebra;
    let report = l.validate();
    if let Some(fail) = report.failures.first() {
        let (i, j, k) = fail.triple;
        return Err(CliError::invalid(format!(
            "Jacobi identity fails on ({}, {}, {}) and {} other triples",
            l.labels()[i],
            l.labels()[j],
            l.labels()[k],
            report.failures.len() - 1
        )));
    }
    if let Some(frame) = &loaded.frame {
        for (s, &h) in frame.h_index.iter().enumerate() {
            let root = frame.datum.simple_roots[s];
            let pos = frame.datum.positive_roots.iter().position(|&r| r == root);
            let ok = pos.is_some_and(|p| frame.coroot(p) == l.basis_vector(h));
            if !ok {
                return Err(CliError::invalid(format!(
                    "frame relation [e, f] = h fails for simple root {s}"
                )));
            }
        }
    }
    Ok(loaded)
}

/// One-line description of a valid algebra.
pub fn describe(l: &LieAlgebra) -> String {
    format!(
        "valid Lie algebra over {}: dim {}, fingerprint {}",
        l.domain(),
        l.dim(),
        l.fingerprint()
    )
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_millis() as u64)
}

pub fn solve(l: &LieAlgebra, task: Task) -> Result<ReportFile, CliError> {
    let field = FieldSpec::from(l.domain());
    let (results, ms) = timed(|| -> Result<TaskResult, CliError> {
        Ok(match task {
            Task::Der => {
                let basis = derivation_space(l);
                let inner = inner_derivations(l);
                TaskResult::Der(report::der_result(&basis, inner.inner.dim()))
            }
            Task::Bider(mode) => {
                let space = biderivation_space(l, mode).map_err(bider_error)?;
                let contains_inner = (mode != BiderMode::Symmetric).then(|| space.contains(&BiderTensor::inner(l)));
                TaskResult::Bider(report::bider_result(&space, contains_inner))
            }
            Task::Radical => {
                let r = symmetric_radical(l).map_err(bider_error)?;
                let props = radical_properties(l, &r, &[]);
                TaskResult::Radical(report::radical_report(&r, &props, l.dim()))
            }
            Task::Postlie => {
                let r = postlie_classify(l, true).map_err(bider_error)?;
                TaskResult::Postlie(report::postlie_result(&r))
            }
        })
    });
    let mut rep = ReportFile::new(l.fingerprint(), field, results?);
    rep.timing_ms = Some(ms);
    Ok(rep)
}

/// Solve the windowed biderivation problem on a Witt truncation over `Q`.
pub fn witt(n_vars: usize, deg_cap: u32, inner_cap: u32, mode: BiderMode) -> Result<ReportFile, CliError> {
    let domain = liederive::exactla::ScalarDomain::Rational;
    let (out, ms) = timed(|| -> Result<ReportFile, CliError> {
        let w = witt_truncation(n_vars, deg_cap, domain).map_err(witt_error)?;
        let p = truncated_biderivation_space(&w, inner_cap, mode).map_err(witt_error)?;
        let contains_inner = (mode == BiderMode::Skew).then(|| p.solutions.contains(&restricted_inner(&w, inner_cap)));
        let result = report::witt_result(&p, w.dim(), contains_inner);
        Ok(ReportFile::new(
            w.algebra().fingerprint(),
            domain.into(),
            TaskResult::Witt(result),
        ))
    });
    let mut rep = out?;
    rep.timing_ms = Some(ms);
    Ok(rep)
}

fn witt_error(e: WittError) -> CliError {
    match e {
        WittError::Bider(b) => bider_error(b),
        WittError::Lie(_) | WittError::Chevalley(_) => CliError::invalid(e.to_string()),
        other => CliError::bad_args(other.to_string()),
    }
}
