//! The algebra file format: a JSON document with every rational written as a
//! string, `"p"` or `"p/q"`.
//!
//! Matrices are arrays of rows (`cod` rows of `dom` entries). Tensor indices
//! are left-major: basis vector `(i, j)` of `X⊗Y` sits at `i·dim(Y) + j`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use weakhopf::emcat::RightModule;
use weakhopf::{LinMap, Scalar, WeakBimonoid};

pub const TENSOR_ORDER: &str = "left-major";

pub type Matrix = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub tensor_order: String,
    pub mu: Matrix,
    pub eta: Vec<String>,
    pub delta: Matrix,
    pub eps: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<Matrix>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub meta: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub carrier: usize,
    pub action: Matrix,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("{0}")]
    Usage(String),
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Field {
        field: field.into(),
        message: message.into(),
    }
}

impl AlgebraSpec {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| {
            let full = e.to_string();
            let tail = format!(" at line {} column {}", e.line(), e.column());
            InputError::Syntax {
                line: e.line(),
                column: e.column(),
                message: full.strip_suffix(&tail).unwrap_or(&full).to_string(),
            }
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Builds the weak bimonoid and the declared modules, in name order.
    pub fn build(&self) -> Result<(WeakBimonoid, Vec<(String, RightModule)>), InputError> {
        if self.tensor_order != TENSOR_ORDER {
            return Err(field_err(
                "tensor_order",
                format!("expected {TENSOR_ORDER:?}, found {:?}", self.tensor_order),
            ));
        }
        let d = self.dim;
        if d == 0 {
            return Err(field_err("dim", "must be positive"));
        }
        let mu = matrix("mu", &self.mu, d, d * d)?;
        let eta = column("eta", &self.eta, d)?;
        let delta = matrix("delta", &self.delta, d * d, d)?;
        let eps = column("eps", &self.eps, d)?.transpose();
        let braid = match &self.braid {
            Some(m) => Some(matrix("braid", m, d * d, d * d)?),
            None => None,
        };
        let b = WeakBimonoid::with_braid(d, mu, eta, delta, eps, braid)
            .map_err(|e| field_err("braid", e.to_string()))?;
        let mut modules = Vec::with_capacity(self.modules.len());
        for (name, m) in &self.modules {
            let path = format!("modules.{name}");
            if m.carrier == 0 {
                return Err(field_err(format!("{path}.carrier"), "must be positive"));
            }
            let action = matrix(
                &format!("{path}.action"),
                &m.action,
                m.carrier,
                m.carrier * d,
            )?;
            let module =
                RightModule::new(action, &b).map_err(|e| field_err(&path, e.to_string()))?;
            modules.push((name.clone(), module));
        }
        Ok((b, modules))
    }

    pub fn from_parts(
        b: &WeakBimonoid,
        modules: &[(String, RightModule)],
        meta: BTreeMap<String, String>,
    ) -> Self {
        AlgebraSpec {
            dim: b.dim(),
            tensor_order: TENSOR_ORDER.to_string(),
            mu: to_matrix(b.mu()),
            eta: to_matrix(b.eta())
                .into_iter()
                .map(|mut r| r.remove(0))
                .collect(),
            delta: to_matrix(b.delta()),
            eps: to_matrix(b.eps()).remove(0),
            braid: b.custom_braid().map(to_matrix),
            modules: modules
                .iter()
                .map(|(n, m)| {
                    (
                        n.clone(),
                        ModuleSpec {
                            carrier: m.carrier(),
                            action: to_matrix(m.action()),
                        },
                    )
                })
                .collect(),
            meta,
        }
    }
}

pub fn to_matrix(f: &LinMap) -> Matrix {
    f.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|v| v.to_string()).collect())
        .collect()
}

fn scalar(field: &str, s: &str) -> Result<Scalar, InputError> {
    s.parse()
        .map_err(|_| field_err(field, format!("{s:?} is not an exact rational")))
}

fn matrix(field: &str, rows: &Matrix, cod: usize, dom: usize) -> Result<LinMap, InputError> {
    if rows.len() != cod {
        return Err(field_err(
            field,
            format!("expected {cod} rows, found {}", rows.len()),
        ));
    }
    let mut out = Vec::with_capacity(cod);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dom {
            return Err(field_err(
                format!("{field}[{r}]"),
                format!("expected {dom} entries, found {}", row.len()),
            ));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(c, s)| scalar(&format!("{field}[{r}][{c}]"), s))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(parsed);
    }
    Ok(LinMap::from_rows(cod, dom, &out).expect("shape checked"))
}

fn column(field: &str, entries: &[String], len: usize) -> Result<LinMap, InputError> {
    if entries.len() != len {
        return Err(field_err(
            field,
            format!("expected {len} entries, found {}", entries.len()),
        ));
    }
    let vals = entries
        .iter()
        .enumerate()
        .map(|(k, s)| scalar(&format!("{field}[{k}]"), s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinMap::column_vector(&vals))
}
