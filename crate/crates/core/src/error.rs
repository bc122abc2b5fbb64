use thiserror::Error;

/// Errors surfaced by the ring, kernel and shuffle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("z-index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: u32, degree: u32 },

    #[error("pair indices must be distinct and positive, got ({i},{j})")]
    BadPair { i: u32, j: u32 },

    #[error("wedge factor 1 - {monomial} vanishes identically")]
    DegenerateFactor { monomial: String },

    #[error("divisor does not factor as a unit monomial times binomials: {0}")]
    DivisorNotFactorable(String),

    #[error("negative exponent on non-invertible symbol {0}")]
    NegativeExponent(String),

    #[error("scalar must not involve z, pair or factor symbols")]
    NonConstantScalar,

    #[error("element of degree {degree} is not symmetric")]
    NotSymmetric { degree: u32 },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("total degree {0} exceeds the oracle cost guard of {1}")]
    CostGuard(u32, u32),

    #[error("assignment hits a pole of the denominator")]
    PoleHit,

    #[error("no value assigned to symbol {0}")]
    UnassignedSymbol(String),
}
