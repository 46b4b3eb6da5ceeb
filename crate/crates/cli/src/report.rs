//! JSON report layout. Bump [`SCHEMA_VERSION`] on breaking changes and keep
//! `schema/report.schema.json` in sync.

use serde::Serialize;
use sha2::{Digest, Sha256};

use assrkit_core::classify::Classification;
use assrkit_core::combined::{row_col_sums, sums_are_one};
use assrkit_core::exact::{format_rational, RMatrix, Rational};
use assrkit_core::matrix_file::to_json;
use assrkit_core::render::{render_matrix, render_scaled};
use assrkit_core::theorems::{CheckReport, Status};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

impl Tool {
    pub fn current() -> Self {
        Tool { name: "assrkit", version: env!("CARGO_PKG_VERSION") }
    }
}

#[derive(Debug, Serialize)]
pub struct RunConfig {
    pub max_order: usize,
    pub digits: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma_trials: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct Scaled {
    pub exponent: i32,
    pub label: String,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct CombinedReport {
    pub det: String,
    pub exact: RMatrix,
    pub decimal: Vec<Vec<String>>,
    pub scaled: Scaled,
    pub row_sums: Vec<String>,
    pub col_sums: Vec<String>,
    pub sums_are_one: bool,
}

impl CombinedReport {
    pub fn new(c: &RMatrix, det: &Rational, digits: usize) -> Self {
        let (rows, cols) = row_col_sums(c);
        let scaled = render_scaled(c, digits.saturating_sub(1));
        CombinedReport {
            det: format_rational(det),
            exact: c.clone(),
            decimal: render_matrix(c, digits),
            scaled: Scaled { exponent: scaled.exponent, label: scaled.scale_label(), rows: scaled.rows },
            row_sums: rows.iter().map(format_rational).collect(),
            col_sums: cols.iter().map(format_rational).collect(),
            sums_are_one: sums_are_one(c),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct InputReport {
    pub label: String,
    /// `sha256:` of the canonical JSON serialization of the matrix.
    pub digest: String,
    pub matrix: RMatrix,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub combined: Option<CombinedReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckReport>>,
}

impl InputReport {
    pub fn new(label: impl Into<String>, matrix: &RMatrix) -> Self {
        InputReport {
            label: label.into(),
            digest: digest(matrix),
            matrix: matrix.clone(),
            classification: None,
            combined: None,
            checks: None,
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Generation {
    pub kind: String,
    pub order: usize,
    pub attempts: usize,
    pub accepted: usize,
}

#[derive(Debug, Default, Serialize)]
pub struct Summary {
    pub inputs: usize,
    pub holds: usize,
    pub fails: usize,
    pub precondition_not_met: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generation: Option<Generation>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: Tool,
    pub command: &'static str,
    pub config: RunConfig,
    pub inputs: Vec<InputReport>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &'static str, config: RunConfig, inputs: Vec<InputReport>) -> Self {
        let mut summary = Summary { inputs: inputs.len(), ..Summary::default() };
        for check in inputs.iter().flat_map(|i| i.checks.iter().flatten()) {
            match check.verdict.status {
                Status::Holds => summary.holds += 1,
                Status::Fails => summary.fails += 1,
                Status::PreconditionNotMet => summary.precondition_not_met += 1,
            }
        }
        Report { schema_version: SCHEMA_VERSION, tool: Tool::current(), command, config, inputs, summary, timing_ms: None }
    }
}

pub fn digest(a: &RMatrix) -> String {
    let hash = Sha256::digest(to_json(a).as_bytes());
    format!("sha256:{}", hex::encode(hash))
}
