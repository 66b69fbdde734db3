//! Crate-wide error type.
//!
//! Every fallible operation returns [`Result`]. Variants carry enough context
//! to print a one-line diagnostic; the CLI maps them onto exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A basis key was handed to an algebra that does not know it, or a
    /// basis enumeration was requested from an instance that cannot provide
    /// one (infinite component, no canonical ordering).
    #[error("unsupported basis: {0}")]
    UnsupportedBasis(String),

    /// The reduced-coproduct series did not terminate within the stated
    /// degree bound, so the antipode sum cannot be formed.
    #[error("not conilpotent at this degree: reduced coproduct still nonzero after {0} iterations")]
    NotConilpotent(usize),

    /// A graded component is larger than the configured elimination cap.
    #[error("degree cap exceeded: component needs {needed} columns, cap is {cap}")]
    DegreeCapExceeded { needed: usize, cap: usize },

    /// A partition argument does not fit the element it is applied to.
    #[error("bad partition: {0}")]
    BadPartition(String),

    /// An operation that applies the cooperadic counit was invoked on an
    /// instance that has none.
    #[error("counit required: {0}")]
    CounitRequired(String),

    /// A relation family was requested for an alphabet it is not defined on.
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    /// Leaf / vertex / tail index out of range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Graph predicates that read decorations were called on an undecorated
    /// graph.
    #[error("decorations required: {0}")]
    DecorationsRequired(String),

    /// Literal or file contents could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Registry lookup failed; the message lists the registered names.
    #[error("unknown instance `{name}`; registered instances: {known}")]
    UnknownInstance { name: String, known: String },

    /// Structural invariant violated (simplicial identities, involution,
    /// partner symmetry, inhomogeneous input, ...).
    #[error("validation error: {0}")]
    Validation(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
