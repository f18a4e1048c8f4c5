//! Generator-matrix files.
//!
//! Text: the first line is `q n_len k_dim`, followed by `k_dim` lines of
//! `n_len` space-separated integer-encoded field elements. Lines starting
//! with `#` are comments.
//! JSON: the same matrix together with the field modulus, the code's origin
//! and an optional verification stamp.

use serde::{Deserialize, Serialize};

use super::{CodeOrigin, LinearCode};
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};

/// Duality facts recorded next to a generator matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub dim: usize,
    pub hull_dim: usize,
    /// One of `self-dual`, `self-orthogonal`, `lcd`, `none`.
    pub verdict: String,
}

impl Verification {
    pub fn of(code: &LinearCode) -> Self {
        let hull_dim = code.hull_dimension();
        let dim = code.k_dim();
        let verdict = if hull_dim == dim && 2 * dim == code.n_len() {
            "self-dual"
        } else if hull_dim == dim && dim > 0 {
            "self-orthogonal"
        } else if hull_dim == 0 {
            "lcd"
        } else {
            "none"
        };
        Verification { dim, hull_dim, verdict: verdict.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub q: u32,
    pub p: u32,
    pub m: u32,
    /// Coefficients of the modulus, constant term first.
    pub modulus: Vec<u32>,
    pub n_len: usize,
    pub k_dim: usize,
    pub rows: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub origin: Option<CodeOrigin>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verification: Option<Verification>,
}

impl CodeFile {
    pub fn new(code: &LinearCode, verification: Option<Verification>) -> Self {
        let f = code.field();
        CodeFile {
            q: f.q(),
            p: f.p(),
            m: f.m(),
            modulus: f.modulus().to_vec(),
            n_len: code.n_len(),
            k_dim: code.k_dim(),
            rows: rows_of(code),
            origin: code.origin.clone(),
            verification,
        }
    }

    pub fn into_code(self) -> Result<LinearCode> {
        let field = FieldSpec::new(self.p as u64, self.m, Some(&self.modulus))?;
        if field.q() != self.q {
            return Err(Error::Parse(format!("q = {} does not match p^m", self.q)));
        }
        let code = build(&field, self.n_len, self.k_dim, self.rows)?;
        Ok(match self.origin {
            Some(o) => code.with_origin(o),
            None => code,
        })
    }
}

fn rows_of(code: &LinearCode) -> Vec<Vec<u32>> {
    code.gen().iter().map(|r| r.iter().map(|x| x.0).collect()).collect()
}

fn build(field: &FieldSpec, n_len: usize, k_dim: usize, rows: Vec<Vec<u32>>) -> Result<LinearCode> {
    if rows.len() != k_dim {
        return Err(Error::Parse(format!("expected {k_dim} rows, found {}", rows.len())));
    }
    let q = field.q();
    let rows = rows
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            if r.len() != n_len {
                return Err(Error::Parse(format!("row {i} has {} entries, expected {n_len}", r.len())));
            }
            r.into_iter()
                .map(|x| if x < q { Ok(FieldElem(x)) } else { Err(Error::Parse(format!("{x} is not in GF({q})"))) })
                .collect()
        })
        .collect::<Result<Vec<Vec<FieldElem>>>>()?;
    LinearCode::from_rows(field, n_len, rows)
}

pub fn to_text(code: &LinearCode) -> String {
    let mut out = format!("{} {} {}\n", code.field().q(), code.n_len(), code.k_dim());
    for r in rows_of(code) {
        let line: Vec<String> = r.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the text format; the field uses its default modulus.
pub fn from_text(text: &str) -> Result<LinearCode> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let nums = parse_line(header)?;
    let [q, n_len, k_dim] = nums[..] else {
        return Err(Error::Parse(format!("header needs 3 fields, got {}", nums.len())));
    };
    let field = FieldSpec::from_order(q as u64)?;
    let rows = lines.map(parse_line).collect::<Result<Vec<_>>>()?;
    build(&field, n_len as usize, k_dim as usize, rows)
}

fn parse_line(line: &str) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("'{t}': {e}"))))
        .collect()
}

pub fn to_json(code: &LinearCode, verification: Option<Verification>) -> String {
    serde_json::to_string_pretty(&CodeFile::new(code, verification)).expect("code file serializes")
}

pub fn from_json(text: &str) -> Result<LinearCode> {
    let file: CodeFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_code()
}

/// Reads either format, choosing JSON when the input starts with `{`.
pub fn read_code(text: &str) -> Result<LinearCode> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}
