use thiserror::Error;

/// Errors raised by the computational engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subspaces live on different ambient frames")]
    FrameMismatch,

    #[error("polynomials have different variable counts ({0} vs {1})")]
    VariableCountMismatch(usize, usize),

    #[error("expected degree {expected}, found {found:?}")]
    DegreeMismatch {
        expected: usize,
        found: Option<usize>,
    },

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generator {0} is the zero polynomial")]
    ZeroGenerator(usize),

    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(usize),

    #[error("{what} = {value} exceeds the supported maximum {max}")]
    TooLarge {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not an O-sequence")]
    NotOSequence(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction fault on path `{case_path}`: expected {expected}, computed {computed}")]
    ConstructionFault {
        case_path: String,
        expected: String,
        computed: String,
    },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("monomial ideal is not stable: {0}")]
    NotStable(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("malformed schedule: {0}")]
    MalformedSchedule(String),

    #[error("data file: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;
