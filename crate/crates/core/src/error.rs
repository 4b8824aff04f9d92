use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("precision exhausted at {bits} bits")]
    PrecisionExhausted { bits: usize },
    #[error("discriminant vanishes identically: not an elliptic fibration")]
    NotAnEllipticFibration,
    #[error("non-minimal model: valuation triple (ord g2, ord g3, ord delta) = ({ord_g2}, {ord_g3}, {ord_delta})")]
    NonMinimalModel {
        ord_g2: String,
        ord_g3: String,
        ord_delta: String,
    },
    #[error("fiber at infinity is smooth")]
    NotSingularAtInfinity,
    #[error("location is not a root of the discriminant")]
    NotSingularHere,
    #[error("Legendre parameter must avoid 0 and 1")]
    DegenerateLegendre,
    #[error("conic is singular at mu = {0}")]
    SingularConic(String),
    #[error("degenerate pair: D(mu) has repeated roots")]
    DegenerateMatch,
    #[error("involution check failed; residual {residual}")]
    InvolutionCheckFailed { residual: String },
    #[error("lattice is not negative definite")]
    IndefiniteLattice,
    #[error("degenerate lattice (determinant zero)")]
    DegenerateLattice,
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("search space too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
