use thiserror::Error;

/// Every failure the library reports. Variant names double as the error
/// names printed by the command line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("GenusTooSmall: genus {0} < 2")]
    GenusTooSmall(u32),
    #[error("InvalidSurface: {0}")]
    InvalidSurface(String),
    #[error("UnknownArc: arc e{0} is not part of the cut system")]
    UnknownArc(u32),
    #[error("BadToken: cannot read crossing token {0:?}")]
    BadToken(String),
    #[error("NotSimple: {0}")]
    NotSimple(String),
    #[error("Inessential: {0}")]
    Inessential(String),
    #[error("SurfaceMismatch: curves live on different surfaces")]
    SurfaceMismatch,
    #[error("NegativePower: twist count {0} must be nonnegative")]
    NegativePower(i64),
    #[error("NotLSpaceForm: {0}")]
    NotLSpaceForm(String),
    #[error("AnchorViolation: {fact}: expected {expected}, computed {computed}")]
    AnchorViolation {
        fact: String,
        expected: String,
        computed: String,
    },
    #[error("BudgetExceeded: {0}")]
    BudgetExceeded(String),
    #[error("CrossValidationFailed: direct intersection {direct} below engine bound {bound}")]
    CrossValidationFailed { direct: i64, bound: i64 },
    #[error("ReplayMismatch: step {step}: {reason}")]
    ReplayMismatch { step: usize, reason: String },
    #[error("SyntaxError at offset {offset}: expected {}, found {found}{}",
        expected.join(" or "),
        unclosed.map(|o| format!(" (parenthesis opened at offset {o} is never closed)")).unwrap_or_default())]
    SyntaxError {
        offset: usize,
        expected: Vec<String>,
        found: String,
        unclosed: Option<usize>,
    },
    #[error("IndexOutOfRange: {what} at offset {offset} must lie in {range}")]
    IndexOutOfRange {
        what: String,
        offset: usize,
        range: String,
    },
    #[error("Serialization: {0}")]
    Serialization(String),
}

impl Error {
    /// The bare variant name, e.g. `AnchorViolation`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::GenusTooSmall(_) => "GenusTooSmall",
            Error::InvalidSurface(_) => "InvalidSurface",
            Error::UnknownArc(_) => "UnknownArc",
            Error::BadToken(_) => "BadToken",
            Error::NotSimple(_) => "NotSimple",
            Error::Inessential(_) => "Inessential",
            Error::SurfaceMismatch => "SurfaceMismatch",
            Error::NegativePower(_) => "NegativePower",
            Error::NotLSpaceForm(_) => "NotLSpaceForm",
            Error::AnchorViolation { .. } => "AnchorViolation",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::CrossValidationFailed { .. } => "CrossValidationFailed",
            Error::ReplayMismatch { .. } => "ReplayMismatch",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::Serialization(_) => "Serialization",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
