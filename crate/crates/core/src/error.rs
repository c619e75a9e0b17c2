use thiserror::Error;

/// Errors raised by the parameter calculus.
///
/// Every variant carries enough context to be reported as a machine-readable
/// record by the command-line front end (see [`Error::kind`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Young diagram: {0}")]
    MalformedDiagram(String),
    #[error("box height {box_height} is smaller than the first column height {first_column}")]
    BoxTooSmall { box_height: usize, first_column: usize },
    #[error("conjugacy class has rank 0")]
    EmptyClass,
    #[error("not a marking: eigenvalue {eigenvalue} occurs {occurrences} times but its diagram has {columns} columns")]
    NotAMarking {
        eigenvalue: String,
        occurrences: usize,
        columns: usize,
    },
    #[error("rank identity violated: rk(C0) = {rank0} but m*r + rk(Cinf) = {expected}")]
    RankMismatch { rank0: usize, expected: usize },
    #[error("slope {s}/{r} is not in lowest terms")]
    NotCoprime { s: u64, r: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("slope numerator is 1; the euclidean split r = kappa*s + rho is undefined")]
    SlopeOne,
    #[error("parameter is not of standard type")]
    NotStandard,
    #[error("parameter is not of standard type I")]
    NotStandardTypeI,
    #[error("parameter is not of standard non-type-I form: {0}")]
    NotStandardNonTypeI(String),
    #[error("inconsistent physics data: {0}")]
    Inconsistent(String),
    #[error("operation {op} is not allowed at step {step} (slope {slope})")]
    NotAllowed {
        op: String,
        step: usize,
        slope: String,
    },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("a wild circle of slope 1 at infinity leaves the two-point singular set under Fourier")]
    SlopeOneAtInfinity,
    #[error("rank deficit: total rank {total} cannot accommodate {required}")]
    RankDeficit { total: i64, required: i64 },
    #[error("orbit structure violated at slope {slope}: {detail}")]
    StructureViolation { slope: String, detail: String },
    #[error("orbit exceeded {0} nodes")]
    OrbitTooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable short identifier for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedDiagram(_) => "MalformedDiagram",
            Error::BoxTooSmall { .. } => "BoxTooSmall",
            Error::EmptyClass => "EmptyClass",
            Error::NotAMarking { .. } => "NotAMarking",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::SlopeOne => "SlopeOne",
            Error::NotStandard => "NotStandard",
            Error::NotStandardTypeI => "NotStandardTypeI",
            Error::NotStandardNonTypeI(_) => "NotStandardNonTypeI",
            Error::Inconsistent(_) => "Inconsistent",
            Error::NotAllowed { .. } => "NotAllowed",
            Error::PreconditionFailed(_) => "PreconditionFailed",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::Unsupported(_) => "Unsupported",
            Error::SlopeOneAtInfinity => "SlopeOneAtInfinity",
            Error::RankDeficit { .. } => "RankDeficit",
            Error::StructureViolation { .. } => "StructureViolation",
            Error::OrbitTooLarge(_) => "OrbitTooLarge",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
