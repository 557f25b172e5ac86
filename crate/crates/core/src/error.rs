use thiserror::Error;

use crate::polyring::DegreeVector;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed exponent: {0}")]
    MalformedExponent(String),
    #[error("division by a non-constant polynomial")]
    NonConstantDivision,
    #[error("empty input")]
    EmptyInput,
    #[error("polynomial ring mismatch")]
    RingMismatch,
    #[error("grading arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("inhomogeneous input: terms of degree {0} and {1}")]
    Inhomogeneous(DegreeVector, DegreeVector),
    #[error("module rank or order mismatch: {0}")]
    ModuleMismatch(String),
    #[error("not a Groebner basis: S-pair ({0}, {1}) has nonzero normal form")]
    NotGroebnerBasis(usize, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("saturation did not stabilize within {0} iterations")]
    IterationCap(usize),
    #[error("genericity validation failed after {} attempts (seeds tried: {seeds:?})", seeds.len())]
    GenericityFailed { seeds: Vec<u64> },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// How a failure should be reported to a caller that maps errors to exit
/// statuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// A hypothesis of the requested construction does not hold.
    Refusal,
    /// Malformed or inconsistent input.
    Input,
    /// An internal invariant or a theorem-level prediction failed.
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Refused(_) | Error::GenericityFailed { .. } => ErrorClass::Refusal,
            Error::InvariantViolation(_)
            | Error::TheoremViolation(_)
            | Error::IterationCap(_)
            | Error::NotGroebnerBasis(..) => ErrorClass::Internal,
            _ => ErrorClass::Input,
        }
    }
}
