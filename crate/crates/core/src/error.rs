use thiserror::Error;

/// Errors raised by the engine. Every variant maps onto one CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic bound exceeded: {0}")]
    ArithmeticBound(String),
    #[error("negative power of a non-invertible operand: {0}")]
    UnsupportedInverse(String),
    #[error("evaluation domain error: {0}")]
    Domain(String),
    #[error("generator index {index} exceeds the cap of {cap}")]
    IndexCap { index: i64, cap: i64 },
    #[error("module grade {grade} exceeds the cap of {cap}")]
    GradeCap { grade: i64, cap: i64 },
    #[error("unsupported for the {profile} profile: {what}")]
    UnsupportedProfile { profile: &'static str, what: String },
    #[error("generator {0} has no action on the oscillator module")]
    UnsupportedGenerator(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("relation {relation} cannot be checked in the {profile} profile")]
    RelationProfileMismatch {
        relation: String,
        profile: &'static str,
    },
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code: 2 for usage/parse problems, 3 for arithmetic bounds.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ArithmeticBound(_) | Error::IndexCap { .. } | Error::GradeCap { .. } => 3,
            _ => 2,
        }
    }
}
