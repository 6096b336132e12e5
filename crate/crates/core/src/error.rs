use thiserror::Error;

/// Everything that can go wrong while building fields, plans and spectra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("field GF({p}^{r}) does not fit in 64-bit arithmetic")]
    FieldTooLarge { p: u64, r: usize },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("modulus is not monic")]
    NonMonicModulus,
    #[error("modulus {0} factors over the prime field")]
    ReducibleModulus(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operation is undefined for the zero element")]
    ZeroElement,
    #[error("no element of order {order} in a field of {size} elements")]
    NoSuchOrder { order: u64, size: u64 },
    #[error("-1 is a square in {0}, so j cannot be adjoined")]
    MinusOneIsResidue(String),
    #[error("exponent {exponent} is not a power of the characteristic {p}")]
    BadExponent { exponent: u64, p: u64 },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("value was built for a different transform plan")]
    PlanMismatch,
    #[error("invalid plan: {0}")]
    InvalidPlan(String),
    #[error("block length must be at least 1")]
    InvalidLength,
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: usize, q: u64 },
    #[error("value for class of {representative} does not close its orbit of size {orbit_len}")]
    InconsistentAssignment {
        representative: usize,
        orbit_len: usize,
    },
    #[error("no value assigned to class representative {0}")]
    MissingAssignment(usize),
    #[error("{0} is not a class representative")]
    UnknownRepresentative(usize),
    #[error("at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("coefficient {value} is out of range for characteristic {p}")]
    OutOfRangeCoefficient { value: u64, p: u64 },
}

impl Error {
    /// Stable, machine-parsable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::EvenCharacteristic => "EvenCharacteristic",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::ZeroDegree => "ZeroDegree",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::NonMonicModulus => "NonMonicModulus",
            Error::ReducibleModulus(_) => "ReducibleModulus",
            Error::FieldMismatch => "FieldMismatch",
            Error::ZeroInverse => "ZeroInverse",
            Error::ZeroElement => "ZeroElement",
            Error::NoSuchOrder { .. } => "NoSuchOrder",
            Error::MinusOneIsResidue(_) => "MinusOneIsResidue",
            Error::BadExponent { .. } => "BadExponent",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::PlanMismatch => "PlanMismatch",
            Error::InvalidPlan(_) => "InvalidPlan",
            Error::InvalidLength => "InvalidLength",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::InconsistentAssignment { .. } => "InconsistentAssignment",
            Error::MissingAssignment(_) => "MissingAssignment",
            Error::UnknownRepresentative(_) => "UnknownRepresentative",
            Error::Parse { .. } => "ParseError",
            Error::OutOfRangeCoefficient { .. } => "OutOfRangeCoefficient",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
