use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u128, right: u128 },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    ZeroGcd,
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("point ({x}, {y}) is not on the curve")]
    NotOnCurve { x: u128, y: u128 },
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("vertical tangent at a Weierstrass point")]
    WeierstrassTangent,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Refused(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
