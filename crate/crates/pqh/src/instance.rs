//! Instance files.
//!
//! ```json
//! {
//!   "n": 1,
//!   "omega_E": [["0", "1"], ["-1", "0"]],
//!   "vectors": [["1", "0", "0", "1"]],
//!   "h_basis": [["1", "0"], ["0", "1"]]
//! }
//! ```
//!
//! Entries are strings `"p"` or `"p/q"` (`q > 0`) or JSON integers. Decimals are rejected.
//! `h_basis` is optional; its columns are `h₁′, h₂′` and it must have determinant 1.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use pqh_core::matrix::Matrix;
use pqh_core::rational::parse_rational;
use pqh_core::{HBasisChange, ModelSpace, Rational, Subspace};

use crate::dto::{row, rows};
use crate::error::CliError;

/// One rational entry as it appears in a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry(pub Rational);

impl TryFrom<Value> for Entry {
    type Error = String;

    fn try_from(v: Value) -> Result<Self, String> {
        match &v {
            Value::String(s) => parse_rational(s).map(Entry).map_err(|e| e.to_string()),
            Value::Number(n) if n.is_i64() || n.is_u64() => {
                parse_rational(&n.to_string()).map(Entry).map_err(|e| e.to_string())
            }
            _ => Err(format!("entry {v} is not a rational: use a string \"p\" or \"p/q\", or an integer")),
        }
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Entry::try_from(Value::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    n: usize,
    #[serde(rename = "omega_E", alias = "omega_e")]
    omega_e: Vec<Vec<Entry>>,
    vectors: Vec<Vec<Entry>>,
    #[serde(default)]
    h_basis: Option<Vec<Vec<Entry>>>,
}

/// Canonical serialized form, as written by `gen`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub n: usize,
    #[serde(rename = "omega_E")]
    pub omega_e: Vec<Vec<String>>,
    pub vectors: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h_basis: Option<Vec<Vec<String>>>,
}

impl InstanceFile {
    pub fn new(space: &ModelSpace, vectors: &[Vec<Rational>], h_basis: Option<&HBasisChange>) -> Self {
        InstanceFile {
            n: space.n(),
            omega_e: rows(space.omega_e()),
            vectors: vectors.iter().map(|v| row(v)).collect(),
            h_basis: h_basis.map(|s| rows(s.matrix())),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }
}

/// A parsed and validated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub space: ModelSpace,
    /// Rows as given in the file, in order.
    pub rows: Vec<Vec<Rational>>,
    pub subspace: Subspace,
    pub h_basis: Option<HBasisChange>,
    pub warnings: Vec<String>,
}

fn matrix(name: &str, entries: Vec<Vec<Entry>>, rows: usize, cols: usize) -> Result<Matrix, CliError> {
    if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
        return Err(CliError::parse(format!("{name} must be {rows}×{cols}")));
    }
    let data: Vec<Vec<Rational>> = entries.into_iter().map(|r| r.into_iter().map(|e| e.0).collect()).collect();
    Ok(Matrix::from_rows(cols, &data))
}

pub fn parse_instance_str(text: &str) -> Result<Instance, CliError> {
    let raw: RawInstance = serde_json::from_str(text).map_err(|e| CliError::parse(format!("malformed instance: {e}")))?;
    if raw.n == 0 {
        return Err(CliError::parse("n must be at least 1"));
    }
    let m = 2 * raw.n;
    let omega = matrix("omega_E", raw.omega_e, m, m)?;
    let space = ModelSpace::new(omega)?;
    let dim = space.dim();
    let mut vectors = Vec::with_capacity(raw.vectors.len());
    for (i, v) in raw.vectors.into_iter().enumerate() {
        if v.len() != dim {
            return Err(CliError::parse(format!("vector {i} has {} entries, expected {dim}", v.len())));
        }
        vectors.push(v.into_iter().map(|e| e.0).collect::<Vec<_>>());
    }
    let h_basis = match raw.h_basis {
        Some(h) => Some(HBasisChange::new(matrix("h_basis", h, 2, 2)?)?),
        None => None,
    };
    let subspace = Subspace::new(dim, &vectors);
    let mut warnings = Vec::new();
    if subspace.dim() < vectors.len() {
        warnings.push(format!(
            "warning: {} of {} rows are dependent; using the reduced echelon basis of their span",
            vectors.len() - subspace.dim(),
            vectors.len()
        ));
    }
    Ok(Instance { space, rows: vectors, subspace, h_basis, warnings })
}

pub fn parse_instance(path: &str) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("cannot read {path}: {e}")))?;
    parse_instance_str(&text)
}
