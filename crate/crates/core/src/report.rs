//! Validation outcomes shared by every structure kind.
//!
//! Validators scan elements in ascending index order and stop at the first
//! counterexample, so a failing report is reproducible byte-for-byte.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// A violated axiom together with the witness elements that break it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Short tag naming the axiom, e.g. `CM2` or `Latin square`.
    pub axiom: String,
    /// Element indices of the counterexample, in the order the axiom names them.
    pub witness: Vec<usize>,
    pub detail: String,
}

impl Violation {
    pub fn new(axiom: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) -> Self {
        Violation {
            axiom: axiom.into(),
            witness,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.detail)
    }
}

/// Why a candidate structure was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Invalid {
    /// Shape errors: wrong lengths, out-of-range indices, mismatched groups.
    #[error("malformed: {0}")]
    Malformed(String),
    /// A sub-structure failed its own validation.
    #[error("{part}: {inner}")]
    Component { part: String, inner: Box<Invalid> },
    /// The structure is well-formed but breaks one of its own axioms.
    #[error("{0}")]
    Axiom(Violation),
}

impl Invalid {
    pub fn axiom(axiom: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) -> Self {
        Invalid::Axiom(Violation::new(axiom, witness, detail))
    }

    pub fn malformed(msg: impl Into<String>) -> Self {
        Invalid::Malformed(msg.into())
    }

    /// Wraps `self` as the failure of the named component.
    pub fn within(self, part: impl Into<String>) -> Self {
        Invalid::Component {
            part: part.into(),
            inner: Box::new(self),
        }
    }

    /// The innermost axiom violation, if any.
    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Invalid::Malformed(_) => None,
            Invalid::Component { inner, .. } => inner.violation(),
            Invalid::Axiom(v) => Some(v),
        }
    }

    /// Dotted path of components leading to the failure; empty for a top-level axiom.
    pub fn component_path(&self) -> Vec<&str> {
        let mut path = Vec::new();
        let mut cur = self;
        while let Invalid::Component { part, inner } = cur {
            path.push(part.as_str());
            cur = inner;
        }
        path
    }

    pub fn is_component(&self) -> bool {
        matches!(self, Invalid::Component { .. })
    }

    pub fn is_malformed(&self) -> bool {
        match self {
            Invalid::Malformed(_) => true,
            Invalid::Component { inner, .. } => inner.is_malformed(),
            Invalid::Axiom(_) => false,
        }
    }

    /// Axiom tag of the innermost violation, or `malformed`.
    pub fn tag(&self) -> &str {
        match self.violation() {
            Some(v) => &v.axiom,
            None => "malformed",
        }
    }
}

pub type Report = Result<(), Invalid>;

/// Extension for attaching a component name to a failing report.
pub trait WithinExt<T> {
    fn within(self, part: &str) -> Result<T, Invalid>;
}

impl<T> WithinExt<T> for Result<T, Invalid> {
    fn within(self, part: &str) -> Result<T, Invalid> {
        self.map_err(|e| e.within(part))
    }
}
