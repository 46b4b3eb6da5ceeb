//! Plain-text and JSON matrix files.
//!
//! Plain text: one row per line, whitespace-separated entries, each an
//! integer, a decimal (converted exactly) or `p/q`. Blank lines and anything
//! after `#` are ignored.
//!
//! JSON: `{"n": 3, "rows": [["1", "-1/2", "0.25"], ...]}`. Entries are
//! strings so fractions survive; plain JSON numbers are accepted on input.

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::exact::{format_rational, parse_rational, rational::ParseRationalError, MatrixError, RMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixFormat {
    PlainText,
    Json,
}

#[derive(Debug, Error)]
pub enum MatrixFileError {
    #[error("no matrix rows found")]
    Empty,
    #[error("line {line}, entry {entry}: {source}")]
    Entry {
        line: usize,
        entry: usize,
        #[source]
        source: ParseRationalError,
    },
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("declared order {declared} but found {actual} rows")]
    OrderMismatch { declared: usize, actual: usize },
    #[error(transparent)]
    Shape(#[from] MatrixError),
}

/// Picks JSON when the first non-blank character is `{`.
pub fn detect_format(text: &str) -> MatrixFormat {
    if text.trim_start().starts_with('{') {
        MatrixFormat::Json
    } else {
        MatrixFormat::PlainText
    }
}

pub fn parse(text: &str) -> Result<RMatrix, MatrixFileError> {
    match detect_format(text) {
        MatrixFormat::PlainText => parse_plain(text),
        MatrixFormat::Json => parse_json(text),
    }
}

pub fn serialize(a: &RMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::PlainText => to_plain(a),
        MatrixFormat::Json => to_json(a),
    }
}

pub fn parse_plain(text: &str) -> Result<RMatrix, MatrixFileError> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let row = content
            .split_whitespace()
            .enumerate()
            .map(|(k, tok)| {
                parse_rational(tok).map_err(|source| MatrixFileError::Entry { line: lineno + 1, entry: k + 1, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(MatrixFileError::Empty);
    }
    Ok(RMatrix::from_rows(rows)?)
}

pub fn to_plain(a: &RMatrix) -> String {
    let cells: Vec<Vec<String>> = a.rows().map(|r| r.iter().map(format_rational).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(line.join(" ").trim_start());
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct JsonMatrixOut {
    n: usize,
    rows: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct JsonMatrixIn {
    n: Option<usize>,
    rows: Vec<Vec<Value>>,
}

fn json_entry(v: &Value, line: usize, entry: usize) -> Result<crate::exact::Rational, MatrixFileError> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        other => other.to_string(),
    };
    parse_rational(&text).map_err(|source| MatrixFileError::Entry { line, entry, source })
}

pub fn parse_json(text: &str) -> Result<RMatrix, MatrixFileError> {
    let raw: JsonMatrixIn = serde_json::from_str(text)?;
    from_json_parts(raw)
}

fn from_json_parts(raw: JsonMatrixIn) -> Result<RMatrix, MatrixFileError> {
    if raw.rows.is_empty() {
        return Err(MatrixFileError::Empty);
    }
    if let Some(n) = raw.n {
        if n != raw.rows.len() {
            return Err(MatrixFileError::OrderMismatch { declared: n, actual: raw.rows.len() });
        }
    }
    let rows = raw
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().enumerate().map(|(j, v)| json_entry(v, i + 1, j + 1)).collect())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RMatrix::from_rows(rows)?)
}

fn json_out(a: &RMatrix) -> JsonMatrixOut {
    JsonMatrixOut { n: a.order(), rows: a.rows().map(|r| r.iter().map(format_rational).collect()).collect() }
}

pub fn to_json(a: &RMatrix) -> String {
    let mut s = serde_json::to_string(&json_out(a)).expect("matrix json");
    s.push('\n');
    s
}

impl Serialize for RMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        json_out(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = JsonMatrixIn::deserialize(d)?;
        from_json_parts(raw).map_err(de::Error::custom)
    }
}
