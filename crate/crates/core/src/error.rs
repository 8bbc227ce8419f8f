use thiserror::Error;

/// Errors produced by the ring, series, solver and Laurent-tail layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator {denominator} is divisible by p = {p}")]
    DenominatorNotUnit { denominator: String, p: u64 },

    #[error("p-adic operands have different primes ({left} vs {right})")]
    PrimeMismatch { left: u64, right: u64 },

    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("p-adic precision must be at least 1")]
    ZeroPrecision,

    #[error("operands live in different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },

    #[error("insufficient order: need {needed}, have {available}")]
    InsufficientOrder { needed: usize, available: usize },

    #[error("constant coefficient a_0 = {0} is not invertible")]
    NotInvertible(String),

    #[error("closed form needs operator order {expected}, got {actual}")]
    WrongOrder { expected: usize, actual: usize },

    #[error("operator has no coefficients")]
    EmptyOperator,

    #[error("leading coefficient a_{0} vanishes")]
    ZeroLeadingCoefficient(usize),

    #[error("not solvable: {0}")]
    NotSolvable(String),

    #[error(
        "right-hand side is not a polynomial; the formal solution does not converge over a field"
    )]
    NotPolynomial,

    #[error("convolution with an infinite Laurent tail diverges over the rationals")]
    DivergentConvolution,

    #[error("cannot parse {input:?} at column {column}: {reason}")]
    Parse {
        input: String,
        column: usize,
        reason: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
