use liecohom::format::FormatError;
use liecohom::torus::TorusError;
use liecohom::{CeError, LieError};
use serde_json::{json, Value};

/// An input-stage or computation error; always exit code 1.
#[derive(Debug, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
    pub detail: Option<Value>,
}

impl CliError {
    pub fn new(kind: &'static str, message: impl Into<String>) -> Self {
        CliError { kind, message: message.into(), detail: None }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "kind": self.kind, "message": self.message });
        if let Some(d) = &self.detail {
            v["detail"] = d.clone();
        }
        json!({ "error": v })
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        let mut err = CliError::new("format", e.to_string());
        if let FormatError::Jacobi(v) = &e {
            err.kind = "jacobi";
            err.detail = Some(json!({ "triple": v.triple, "residual": v.residual }));
        }
        err
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        let kind = match e {
            LieError::UnknownName(_) => "unknown-catalog-name",
            LieError::UnorderedScalar(_) => "unordered-scalar",
            LieError::NotAnIdeal => "not-an-ideal",
            LieError::NotASubalgebra => "not-a-subalgebra",
            _ => "algebra",
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<CeError> for CliError {
    fn from(e: CeError) -> Self {
        match e {
            CeError::Lie(l) => l.into(),
            CeError::NotASubalgebra => CliError::new("not-a-subalgebra", e.to_string()),
            CeError::TooLarge { .. } => CliError::new("too-large", e.to_string()),
            _ => CliError::new("cohomology", e.to_string()),
        }
    }
}

impl From<TorusError> for CliError {
    fn from(e: TorusError) -> Self {
        let kind = match e {
            TorusError::NotClosed => "not-closed",
            _ => "foliation",
        };
        CliError::new(kind, e.to_string())
    }
}
