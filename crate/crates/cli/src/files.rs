use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use liederive::chevalley::{root_system, ChevalleyFrame, ClassicalType};
use liederive::exactla::{parse_scalar, ScalarDomain, SparseVec};
use liederive::liecore::{LieAlgebra, Subspace};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

/// Field descriptor as written in files: `"rational"` or `{"prime": p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    pub fn domain(self) -> Result<ScalarDomain, CliError> {
        match self {
            FieldSpec::Rational => Ok(ScalarDomain::Rational),
            FieldSpec::Prime(p) => ScalarDomain::prime(p as u64).map_err(|e| CliError::invalid(e.to_string())),
        }
    }
}

impl From<ScalarDomain> for FieldSpec {
    fn from(d: ScalarDomain) -> Self {
        match d {
            ScalarDomain::Rational => FieldSpec::Rational,
            ScalarDomain::Prime(p) => FieldSpec::Prime(p),
        }
    }
}

/// Accepts `rational`, `Q`, `prime:p` and `Fp`.
impl FromStr for FieldSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rational") || s == "Q" {
            return Ok(FieldSpec::Rational);
        }
        let digits = s
            .strip_prefix("prime:")
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| format!("unknown field {s:?} (expected rational, Q, prime:p or Fp)"))?;
        let p: u64 = digits.parse().map_err(|_| format!("bad prime in {s:?}"))?;
        ScalarDomain::prime(p).map_err(|e| e.to_string())?;
        Ok(FieldSpec::Prime(p as u32))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<(usize, String)>,
}

/// Root datum and index maps of a Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameBlock {
    #[serde(rename = "type")]
    pub type_letter: String,
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<usize>,
    pub simple_roots: Vec<usize>,
    pub e_index: Vec<usize>,
    pub f_index: Vec<usize>,
    pub h_index: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: u32,
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    pub constants: Vec<ConstantEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<FrameBlock>,
}

/// A loaded algebra file.
#[derive(Clone, Debug)]
pub struct LoadedAlgebra {
    pub algebra: LieAlgebra,
    pub frame: Option<ChevalleyFrame>,
}

impl AlgebraFile {
    pub fn from_algebra(l: &LieAlgebra, frame: Option<&ChevalleyFrame>) -> Self {
        let constants = l
            .constants()
            .map(|(i, j, v)| ConstantEntry {
                i,
                j,
                coeffs: v.entries().iter().map(|(k, c)| (*k, c.to_string())).collect(),
            })
            .collect();
        AlgebraFile {
            format_version: FORMAT_VERSION,
            field: l.domain().into(),
            dim: l.dim(),
            labels: l.labels().to_vec(),
            constants,
            frame: frame.map(|f| FrameBlock {
                type_letter: f.datum.type_letter.to_string(),
                rank: f.datum.rank,
                roots: f.datum.roots.clone(),
                positive_roots: f.datum.positive_roots.clone(),
                simple_roots: f.datum.simple_roots.clone(),
                e_index: f.e_index.clone(),
                f_index: f.f_index.clone(),
                h_index: f.h_index.clone(),
            }),
        }
    }

    pub fn to_algebra(&self) -> Result<LoadedAlgebra, CliError> {
        if self.format_version != FORMAT_VERSION {
            return Err(CliError::invalid(format!(
                "unsupported format_version {}",
                self.format_version
            )));
        }
        let domain = self.field.domain()?;
        let dim = self.dim;
        let mut constants = Vec::with_capacity(self.constants.len());
        for c in &self.constants {
            let mut entries = Vec::with_capacity(c.coeffs.len());
            for (k, text) in &c.coeffs {
                let v = parse_scalar(text, domain).map_err(|e| CliError::invalid(e.to_string()))?;
                entries.push((*k, v));
            }
            let v = SparseVec::from_entries(domain, dim, entries)
                .map_err(|e| CliError::invalid(format!("pair ({}, {}): {e}", c.i, c.j)))?;
            constants.push((c.i, c.j, v));
        }
        let algebra = LieAlgebra::new(domain, dim, Some(self.labels.clone()), constants)
            .map_err(|e| CliError::invalid(e.to_string()))?;
        let frame = self.frame.as_ref().map(|f| load_frame(f, &algebra)).transpose()?;
        Ok(LoadedAlgebra { algebra, frame })
    }

    /// Pretty JSON with a trailing newline. This is the canonical byte form.
    pub fn to_text(&self) -> String {
        crate::to_json_text(self)
    }

    pub fn from_text(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::invalid(format!("malformed algebra file: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_text(&text)
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_text()).map_err(|e| CliError::io(path, e))
    }
}

fn load_frame(block: &FrameBlock, algebra: &LieAlgebra) -> Result<ChevalleyFrame, CliError> {
    let t: ClassicalType = block.type_letter.parse().map_err(|e: String| CliError::invalid(e))?;
    let datum = root_system(t, block.rank).map_err(|e| CliError::invalid(e.to_string()))?;
    if datum.roots != block.roots
        || datum.positive_roots != block.positive_roots
        || datum.simple_roots != block.simple_roots
    {
        return Err(CliError::invalid("frame root datum does not match its type and rank"));
    }
    let p = datum.num_positive();
    let n = algebra.dim();
    if block.e_index.len() != p
        || block.f_index.len() != p
        || block.h_index.len() != block.rank
        || block
            .e_index
            .iter()
            .chain(&block.f_index)
            .chain(&block.h_index)
            .any(|&i| i >= n)
    {
        return Err(CliError::invalid("frame index maps do not fit the algebra"));
    }
    let domain = algebra.domain();
    let hs: Vec<SparseVec> = block.h_index.iter().map(|&i| algebra.basis_vector(i)).collect();
    Ok(ChevalleyFrame {
        algebra: algebra.clone(),
        datum,
        e_index: block.e_index.clone(),
        f_index: block.f_index.clone(),
        h_index: block.h_index.clone(),
        cartan: Subspace::span(domain, n, &hs),
    })
}
