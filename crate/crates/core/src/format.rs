//! JSON file formats. Indices in files are 1-based; scalars are text.
//!
//! Algebra files:
//! ```json
//! { "name": "heis3", "dim": 3,
//!   "brackets": [ { "i": 1, "j": 2, "coeffs": { "3": "1" } } ],
//!   "subalgebra": [ ["0", "0", "1"] ] }
//! ```
//! Only `i < j` is stored; omitted brackets are zero.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::ce::BettiTable;
use crate::exterior;
use crate::liealg::{JacobiViolation, LieAlgebra, LieError};
use crate::linalg::Subspace;
use crate::scalar::Scalar;
use crate::torus::{Trig, TrigForm, TwoPiLaurent};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("bracket [e{i}, e{j}] violates the storage rule: {reason}")]
    Storage { i: usize, j: usize, reason: String },
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("{0}")]
    Jacobi(JacobiViolation),
    #[error("row {row} has length {found}, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("subalgebra rows are not closed under the bracket")]
    NotASubalgebra,
    #[error("bad subset key {0:?}")]
    SubsetKey(String),
    #[error("form term: {0}")]
    Form(crate::torus::TorusError),
    #[error("{0}")]
    Lie(LieError),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subalgebra: Option<Vec<Vec<Scalar>>>,
}

impl AlgebraFile {
    pub fn from_algebra(l: &LieAlgebra<Scalar>, h: Option<&Subspace<Scalar>>) -> Self {
        let brackets = l
            .upper_brackets()
            .into_iter()
            .map(|(i, j, cs)| BracketEntry { i: i + 1, j: j + 1, coeffs: cs.into_iter().map(|(k, c)| (k + 1, c)).collect() })
            .collect();
        AlgebraFile {
            name: l.name().to_string(),
            dim: l.dim(),
            brackets,
            subalgebra: h.map(Subspace::basis_vectors),
        }
    }

    pub fn into_algebra(self) -> Result<(LieAlgebra<Scalar>, Option<Subspace<Scalar>>), FormatError> {
        let dim = self.dim;
        let mut brackets = Vec::with_capacity(self.brackets.len());
        let mut seen = std::collections::BTreeSet::new();
        for b in self.brackets {
            for index in [b.i, b.j] {
                if index == 0 || index > dim {
                    return Err(FormatError::IndexOutOfRange { index, dim });
                }
            }
            if b.i >= b.j {
                return Err(FormatError::Storage { i: b.i, j: b.j, reason: "only i < j may be stored".into() });
            }
            if !seen.insert((b.i, b.j)) {
                return Err(FormatError::Storage { i: b.i, j: b.j, reason: "bracket given twice".into() });
            }
            let mut coeffs = Vec::with_capacity(b.coeffs.len());
            for (k, c) in b.coeffs {
                if k == 0 || k > dim {
                    return Err(FormatError::IndexOutOfRange { index: k, dim });
                }
                coeffs.push((k - 1, c));
            }
            brackets.push((b.i - 1, b.j - 1, coeffs));
        }
        let l = LieAlgebra::from_brackets(self.name, dim, brackets).map_err(|e| match e {
            LieError::Jacobi(v) => FormatError::Jacobi(v),
            other => FormatError::Lie(other),
        })?;
        let h = match self.subalgebra {
            None => None,
            Some(rows) => {
                let h = subspace_from_rows(dim, rows)?;
                if !l.is_subalgebra(&h).map_err(FormatError::Lie)? {
                    return Err(FormatError::NotASubalgebra);
                }
                Some(h)
            }
        };
        Ok((l, h))
    }
}

pub fn subspace_from_rows(dim: usize, rows: Vec<Vec<Scalar>>) -> Result<Subspace<Scalar>, FormatError> {
    for (row, r) in rows.iter().enumerate() {
        if r.len() != dim {
            return Err(FormatError::RowLength { row: row + 1, expected: dim, found: r.len() });
        }
    }
    Ok(Subspace::span(dim, rows))
}

/// Parses subalgebra rows given as a bare JSON array `[[ScalarText]]`.
pub fn parse_rows(text: &str, dim: usize) -> Result<Subspace<Scalar>, FormatError> {
    let rows: Vec<Vec<Scalar>> = serde_json::from_str(text)?;
    subspace_from_rows(dim, rows)
}

pub fn parse_algebra(text: &str) -> Result<(LieAlgebra<Scalar>, Option<Subspace<Scalar>>), FormatError> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    file.into_algebra()
}

pub fn print_algebra(l: &LieAlgebra<Scalar>, h: Option<&Subspace<Scalar>>) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(l, h)).expect("plain data serializes")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoliationFile {
    pub n: usize,
    pub generators: Vec<Vec<Scalar>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormTermFile {
    pub mode: Vec<i64>,
    pub trig: Trig,
    /// Subset keys like `"1,3"` (1-based); `""` for 0-forms.
    pub coeffs: BTreeMap<String, Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormFile {
    pub degree: usize,
    pub terms: Vec<FormTermFile>,
}

fn parse_subset(key: &str) -> Result<Vec<usize>, FormatError> {
    let key_err = || FormatError::SubsetKey(key.to_string());
    if key.trim().is_empty() {
        return Ok(Vec::new());
    }
    key.split(',')
        .map(|p| match p.trim().parse::<usize>() {
            Ok(i) if i > 0 => Ok(i - 1),
            _ => Err(key_err()),
        })
        .collect()
}

fn subset_key(mask: exterior::Mask) -> String {
    exterior::elements(mask).iter().map(|j| (j + 1).to_string()).collect::<Vec<_>>().join(",")
}

/// Parses a form spec on `T^n`.
pub fn parse_form(text: &str, n: usize) -> Result<TrigForm, FormatError> {
    let file: FormFile = serde_json::from_str(text)?;
    let mut form = TrigForm::zero(n, file.degree);
    for t in file.terms {
        for (key, c) in t.coeffs {
            let subset = parse_subset(&key)?;
            form.add_term(&t.mode, t.trig, &subset, TwoPiLaurent::scalar(c))
                .map_err(FormatError::Form)?;
        }
    }
    Ok(form)
}

/// JSON view of a form; coefficients may carry powers of `2π`.
pub fn form_json(form: &TrigForm) -> Value {
    let mut grouped: BTreeMap<(Vec<i64>, Trig), Map<String, Value>> = BTreeMap::new();
    for ((k, t, s), c) in form.terms() {
        grouped.entry((k.clone(), *t)).or_default().insert(subset_key(*s), Value::String(c.to_string()));
    }
    let terms: Vec<Value> = grouped
        .into_iter()
        .map(|((mode, trig), coeffs)| json!({ "mode": mode, "trig": trig, "coeffs": coeffs }))
        .collect();
    json!({ "degree": form.degree(), "terms": terms })
}

/// `{ algebra, route, betti, euler, representatives: { "k": [[ScalarText]] } }`;
/// representatives are emitted only when requested.
pub fn betti_json(algebra: &str, table: &BettiTable<Scalar>, representatives: bool) -> Value {
    let mut reps = Map::new();
    if representatives {
        for (k, vs) in table.representatives.iter().enumerate() {
            reps.insert(k.to_string(), serde_json::to_value(vs).expect("scalars serialize"));
        }
    }
    json!({
        "algebra": algebra,
        "route": table.route,
        "betti": table.betti,
        "euler": table.euler(),
        "representatives": reps,
    })
}
