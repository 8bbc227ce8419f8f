use std::fmt;

use formalode_core::Error as CoreError;

use crate::format::Report;

/// Process exit codes. Each failure class maps to exactly one code.
pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 1;
    pub const NOT_INVERTIBLE: i32 = 2;
    pub const NOT_SOLVABLE: i32 = 3;
    pub const NOT_POLYNOMIAL: i32 = 4;
    pub const INSUFFICIENT_ORDER: i32 = 5;
    pub const DIVERGENT_CONVOLUTION: i32 = 6;
    pub const RING_MISMATCH: i32 = 7;
    pub const LIMIT_EXCEEDED: i32 = 8;
    pub const IO: i32 = 9;
    pub const VERIFICATION_FAILED: i32 = 10;
}

#[derive(Debug)]
pub enum CliError {
    Core(CoreError),
    /// Bad flags or malformed input, with a `source:line:column` style location.
    Usage(String),
    Io(String),
    LimitExceeded {
        requested: usize,
        cap: usize,
    },
    /// The solve succeeded but substitution did not reproduce the right-hand side.
    VerificationFailed(Box<Report>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => core_exit_code(e),
            CliError::Usage(_) => exit::PARSE,
            CliError::Io(_) => exit::IO,
            CliError::LimitExceeded { .. } => exit::LIMIT_EXCEEDED,
            CliError::VerificationFailed(_) => exit::VERIFICATION_FAILED,
        }
    }
}

pub fn core_exit_code(e: &CoreError) -> i32 {
    match e {
        CoreError::NotInvertible(_) | CoreError::NotAUnit(_) => exit::NOT_INVERTIBLE,
        CoreError::NotSolvable(_) => exit::NOT_SOLVABLE,
        CoreError::NotPolynomial => exit::NOT_POLYNOMIAL,
        CoreError::InsufficientOrder { .. } => exit::INSUFFICIENT_ORDER,
        CoreError::DivergentConvolution => exit::DIVERGENT_CONVOLUTION,
        CoreError::RingMismatch { .. } | CoreError::PrimeMismatch { .. } => exit::RING_MISMATCH,
        CoreError::Parse { .. }
        | CoreError::DenominatorNotUnit { .. }
        | CoreError::NotPrime(_)
        | CoreError::ZeroPrecision
        | CoreError::EmptyOperator
        | CoreError::ZeroLeadingCoefficient(_)
        | CoreError::WrongOrder { .. } => exit::PARSE,
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(CoreError::Parse {
                input,
                column,
                reason,
            }) => write!(f, "{input:?}:1:{column}: {reason}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(msg) | CliError::Io(msg) => f.write_str(msg),
            CliError::LimitExceeded { requested, cap } => write!(
                f,
                "requested order {requested} exceeds FORMALODE_MAX_ORDER = {cap}"
            ),
            CliError::VerificationFailed(_) => f.write_str(
                "substitution check failed: P(D) w does not reproduce the right-hand side",
            ),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

/// Attaches the flag or file the failing input came from.
pub fn in_source(source: &str, e: CoreError) -> CliError {
    match e {
        CoreError::Parse {
            input,
            column,
            reason,
        } => CliError::Usage(format!(
            "{source}:1:{column}: cannot parse {input:?}: {reason}"
        )),
        other => CliError::Core(other),
    }
}

pub type CliResult<T> = Result<T, CliError>;
