use thiserror::Error;

/// Failures reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size limit exceeded: {what} is {actual}, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph has {0} vertices, at most 64 are supported")]
    Capacity(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("axiom {axiom} violated: {detail}")]
    Axiom { axiom: &'static str, detail: String },
    #[error("unknown catalog graph `{0}`")]
    UnknownGraph(String),
    #[error("fixture `{name}` is quarantined: {detail}")]
    Quarantined { name: String, detail: String },
    #[error("fixture `{name}` failed validation: {detail}")]
    Fixture { name: String, detail: String },
    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
    #[error("invalid minor operation: {0}")]
    InvalidMinorOp(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_limit(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::SizeLimit { what, actual, limit })
    } else {
        Ok(())
    }
}
