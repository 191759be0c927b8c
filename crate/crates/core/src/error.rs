use std::fmt;

use thiserror::Error;

/// What went wrong while reading a matroid, graph, or split file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MalformedHeader(String),
    BadBitCharacter(char),
    DuplicateLabel(String),
    LengthMismatch { expected: usize, found: usize },
    MissingRows { expected: usize, found: usize },
    TrailingContent,
    MalformedEdge(String),
    BadLabel(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MalformedHeader(s) => write!(f, "malformed header: {s}"),
            ParseErrorKind::BadBitCharacter(c) => write!(f, "bad bit character {c:?}"),
            ParseErrorKind::DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            ParseErrorKind::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            ParseErrorKind::MissingRows { expected, found } => {
                write!(f, "expected {expected} rows, found {found}")
            }
            ParseErrorKind::TrailingContent => write!(f, "unexpected trailing content"),
            ParseErrorKind::MalformedEdge(s) => write!(f, "malformed edge line: {s}"),
            ParseErrorKind::BadLabel(l) => write!(f, "bad label {l:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("elements must be distinct, got {0:?} twice")]
    IdenticalElements(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("invalid label {0:?}: labels must be nonempty and contain no whitespace or commas")]
    InvalidLabel(String),
    #[error("dimension {dim} exceeds the span-enumeration guard of {limit}")]
    DimensionExceeded { dim: usize, limit: usize },
    #[error("ground set of {size} elements exceeds the {guard} guard of {limit}")]
    GroundTooLarge {
        size: usize,
        limit: usize,
        guard: &'static str,
    },
    #[error("row length {found} does not match column count {expected}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("separation side must be a nonempty proper subset of the ground set")]
    EmptySide,
    #[error("{0} is not a circuit")]
    NotACircuit(String),
    #[error("edges {0:?} and {1:?} share no endpoint")]
    NonAdjacentEdges(String, String),
    #[error("edge {0:?} is a self-loop and cannot be split")]
    SelfLoop(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown statement {0:?}")]
    UnknownStatement(String),
    #[error("{}line {line}, column {column}: {kind}", file.as_ref().map(|f| format!("{f}: ")).unwrap_or_default())]
    Parse {
        file: Option<String>,
        line: usize,
        column: usize,
        kind: ParseErrorKind,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        Error::Parse {
            file: None,
            line,
            column,
            kind,
        }
    }

    /// Attaches a file name to a parse error; other errors pass through.
    pub fn in_file(self, name: &str) -> Self {
        match self {
            Error::Parse {
                line, column, kind, ..
            } => Error::Parse {
                file: Some(name.to_string()),
                line,
                column,
                kind,
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
