use thiserror::Error;

/// Errors produced by the step-up toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("delta is undefined for equal vertices")]
    EqualVertices,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("duplicate vertex in triple")]
    DuplicateVertex,
    #[error("sequence is not a strictly increasing chain")]
    NotAChain,
    #[error("invalid delta sequence: {0}")]
    InvalidSequence(String),
    #[error("inconsistent J'' trace: {0}")]
    InconsistentTrace(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),
    #[error("pattern family is empty")]
    EmptyFamily,
    #[error("pattern family misses required d={0}")]
    CoverageGap(usize),
    #[error("step-up needs uniformity k >= 3, got {0}")]
    BadUniformity(u32),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn too_large(
        what: &'static str,
        size: impl Into<u128>,
        limit: impl Into<u128>,
    ) -> Self {
        Error::TooLarge {
            what,
            size: size.into(),
            limit: limit.into(),
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// True for guard violations (inputs beyond a configured size limit).
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
