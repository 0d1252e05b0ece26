use thiserror::Error;

/// Errors raised by the exact-algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: operands live in different number fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("polynomial is reducible over Q: {0}")]
    NotIrreducible(String),
    #[error("invalid field automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("not a Lie algebra automorphism: {0}")]
    NotAutomorphism(String),
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspace is not an ideal: [e_{basis}, v] leaves it for basis vector {vector}")]
    NotAnIdeal { basis: usize, vector: usize },
    #[error("ideal is not entangled: 1⊗a lies in N for a = [{witness}]")]
    NotEntangled { witness: String },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("centralizer bound violated: dim_Q C(x) = {centralizer_dim} < [E:Q] = {degree} at {sample}")]
    LemmaViolation {
        sample: String,
        centralizer_dim: usize,
        degree: usize,
    },
    #[error("malformed structure: {0}")]
    Encoding(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
