use thiserror::Error;

use crate::io::expr::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A family constructor was called with parameters below its minimum.
    #[error("invalid family {family}: {constraint}")]
    InvalidFamily { family: String, constraint: String },

    #[error("edge edit rejected: {reason} (offending edges: {})", fmt_edges(offending))]
    Edit {
        reason: String,
        offending: Vec<(usize, usize)>,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The input is too large for the requested exact method.
    #[error("resource limit in {what}: {detail}; {hint}")]
    Resource {
        what: &'static str,
        detail: String,
        hint: String,
    },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("evaluation error at {line}:{column}: {message}")]
    Eval {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("graph6 decode error at byte {offset}: {message}")]
    Decode { offset: usize, message: String },

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn resource(what: &'static str, detail: impl Into<String>, hint: impl Into<String>) -> Self {
        Error::Resource {
            what,
            detail: detail.into(),
            hint: hint.into(),
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

fn fmt_edges(edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|(u, v)| format!("{{{},{}}}", u + 1, v + 1))
        .collect::<Vec<_>>()
        .join(", ")
}
