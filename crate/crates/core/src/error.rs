use thiserror::Error;

/// Errors produced by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { pos: usize, name: char },
    #[error("characteristic {p} divides degree {degree}")]
    CharacteristicDividesDegree { p: u32, degree: u32 },
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("ambient module mismatch: {0}")]
    AmbientMismatch(String),
    #[error("quotient by the zero polynomial")]
    ZeroQuotient,
    #[error("not a codimension two ideal: {0}")]
    NotCodimTwo(String),
    #[error("not zero-dimensional: Hilbert polynomial has degree {0}")]
    NotZeroDimensional(usize),
    #[error("Hilbert polynomial did not stabilize below degree {0}")]
    Stabilization(u32),
    #[error("module is not saturated")]
    NotSaturated,
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("genericity check failed after {attempts} attempts: {reason}")]
    Genericity { attempts: usize, reason: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
