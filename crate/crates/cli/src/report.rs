use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use liederive::biderive::{
    BiderSolutionSpace, BiderTensor, DerivationMatrix, PostLieReport, PostLieVerdict, PropertyReport, RadicalResult,
};
use liederive::exactla::{Scalar, SparseVec};
use liederive::witt::{generator_vanishing_report, FilteredBiderProblem, VanishingStatus};

use crate::files::FieldSpec;
use crate::CliError;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Nonzero entries `[i, j, k, value]` of a tensor, lexicographic.
pub type TensorEntries = Vec<(usize, usize, usize, String)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub tool_version: String,
    pub fingerprint: String,
    pub field: FieldSpec,
    pub results: TaskResult,
    /// Wall-clock time of the computation. Excluded from determinism checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "task", rename_all = "snake_case")]
pub enum TaskResult {
    Der(DerResult),
    Bider(BiderResult),
    Radical(RadicalReport),
    Postlie(PostLieResult),
    Witt(WittResult),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerResult {
    pub dim: usize,
    pub inner_dim: usize,
    pub outer_dim: usize,
    /// Nonzero matrix entries `[row, col, value]` per basis derivation.
    pub basis: Vec<Vec<(usize, usize, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiderResult {
    pub mode: String,
    pub dim: usize,
    pub basis: Vec<TensorEntries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contains_inner: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalReport {
    pub symmetric_dim: usize,
    pub dim: usize,
    pub whole: bool,
    pub basis: Vec<Vec<(usize, String)>>,
    /// `[basis_index, solution, partner]`: solution `s` is nonzero on `(b_i, b_partner)`.
    pub witnesses: Vec<(usize, usize, usize)>,
    pub subalgebra: bool,
    pub ideal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PostLieResult {
    pub param_dim: usize,
    pub basis: Vec<TensorEntries>,
    pub quadratic_system: Vec<String>,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<Vec<String>>,
    pub whole_space: bool,
    pub enumerated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub label: String,
    pub degree: u32,
    pub partners: Vec<String>,
    pub status: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub non_vanishing: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittResult {
    pub n_vars: usize,
    pub deg_cap: u32,
    pub inner_cap: u32,
    pub mode: String,
    pub window: Vec<String>,
    pub truncation_dim: usize,
    pub unknowns: usize,
    pub imposed_rows: usize,
    pub dim: usize,
    pub basis: Vec<TensorEntries>,
    /// `[interior, boundary]` entry counts per basis tensor.
    pub support: Vec<(usize, usize)>,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contains_inner: Option<bool>,
}

impl ReportFile {
    pub fn new(fingerprint: String, field: FieldSpec, results: TaskResult) -> Self {
        ReportFile {
            tool_version: TOOL_VERSION.to_string(),
            fingerprint,
            field,
            results,
            timing_ms: None,
        }
    }

    pub fn to_text(&self) -> String {
        crate::to_json_text(self)
    }

    pub fn from_text(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::invalid(format!("malformed report: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_text(&text)
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_text()).map_err(|e| CliError::io(path, e))
    }

    /// The report text with timing removed.
    pub fn canonical_text(&self) -> String {
        let mut r = self.clone();
        r.timing_ms = None;
        r.to_text()
    }

    /// SHA-256 of [`ReportFile::canonical_text`].
    pub fn determinism_hash(&self) -> String {
        Sha256::digest(self.canonical_text().as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

pub fn tensor_entries(t: &BiderTensor) -> TensorEntries {
    t.entries().map(|(i, j, k, v)| (i, j, k, v.to_string())).collect()
}

fn vec_entries(v: &SparseVec) -> Vec<(usize, String)> {
    v.entries().iter().map(|(k, c)| (*k, c.to_string())).collect()
}

fn point_text(p: &[Scalar]) -> Vec<String> {
    p.iter().map(Scalar::to_string).collect()
}

pub fn der_result(basis: &[DerivationMatrix], inner_dim: usize) -> DerResult {
    DerResult {
        dim: basis.len(),
        inner_dim,
        outer_dim: basis.len() - inner_dim,
        basis: basis
            .iter()
            .map(|d| d.matrix.triplets().map(|(r, c, v)| (r, c, v.to_string())).collect())
            .collect(),
    }
}

pub fn bider_result(space: &BiderSolutionSpace, contains_inner: Option<bool>) -> BiderResult {
    BiderResult {
        mode: space.mode.to_string(),
        dim: space.dim_solution,
        basis: space.basis.iter().map(tensor_entries).collect(),
        contains_inner,
        warnings: space.warnings.clone(),
    }
}

pub fn radical_report(r: &RadicalResult, props: &PropertyReport, algebra_dim: usize) -> RadicalReport {
    RadicalReport {
        symmetric_dim: r.solutions.dim_solution,
        dim: r.radical.dim(),
        whole: r.radical.dim() == algebra_dim,
        basis: r.radical.basis_vectors().iter().map(vec_entries).collect(),
        witnesses: r
            .witnesses
            .iter()
            .map(|w| (w.basis_index, w.solution, w.partner))
            .collect(),
        subalgebra: props.subalgebra,
        ideal: props.ideal,
    }
}

pub fn postlie_result(r: &PostLieReport) -> PostLieResult {
    let (verdict, points, whole_space) = match &r.verdict {
        PostLieVerdict::TrivialOnly => ("trivial_only", Vec::new(), false),
        PostLieVerdict::NontrivialFound { points, whole_space } => (
            "nontrivial_found",
            points.iter().map(|p| point_text(p)).collect(),
            *whole_space,
        ),
        PostLieVerdict::Undecided => ("undecided", Vec::new(), false),
    };
    PostLieResult {
        param_dim: r.param_dim,
        basis: r.solutions.basis.iter().map(tensor_entries).collect(),
        quadratic_system: r.quadratic_system.iter().map(|q| q.to_string()).collect(),
        verdict: verdict.to_string(),
        points,
        whole_space,
        enumerated: r.enumerated,
    }
}

pub fn witt_result(p: &FilteredBiderProblem, truncation_dim: usize, contains_inner: Option<bool>) -> WittResult {
    let label = |i: usize| p.label(i).to_string();
    let generators = generator_vanishing_report(p)
        .into_iter()
        .map(|g| {
            let (status, bad) = match g.status {
                VanishingStatus::Unconstrained => ("unconstrained", Vec::new()),
                VanishingStatus::AllVanish => ("all_vanish", Vec::new()),
                VanishingStatus::NonVanishing(b) => ("non_vanishing", b),
            };
            GeneratorEntry {
                label: g.label,
                degree: g.degree,
                partners: g.partners.iter().map(|&j| label(j)).collect(),
                status: status.to_string(),
                non_vanishing: bad.iter().map(|&j| label(j)).collect(),
            }
        })
        .collect();
    WittResult {
        n_vars: p.n_vars,
        deg_cap: p.deg_cap,
        inner_cap: p.inner_cap,
        mode: p.mode.to_string(),
        window: (0..p.window).map(label).collect(),
        truncation_dim,
        unknowns: p.n_unknowns,
        imposed_rows: p.system.n_rows(),
        dim: p.solutions.dim_solution,
        basis: p.solutions.basis.iter().map(tensor_entries).collect(),
        support: p.support().iter().map(|s| (s.interior, s.boundary)).collect(),
        generators,
        contains_inner,
    }
}
