//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("denominator must be nonzero")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("not a rational: {0:?} (expected \"p\" or \"p/q\" with q > 0)")]
    BadRational(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("identity mixes the algebra operation with dialgebra operations")]
    MixedMode,

    #[error("expected a {expected}-mode identity")]
    ModeMismatch { expected: &'static str },

    #[error("identity uses the involution but no involution was supplied")]
    MissingInvolution,

    #[error("unknown builtin identity family: {0:?}")]
    UnknownIdentity(String),

    #[error("unknown builtin dialgebra: {0:?}")]
    UnknownAlgebra(String),

    #[error("unknown property: {0:?}")]
    UnknownProperty(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("involution matrix does not square to the identity")]
    NotAnInvolution,

    #[error("gamma must be nonzero")]
    ZeroGamma,

    #[error("identity is not multilinear: {0}")]
    NotMultilinear(String),

    #[error("central variable {var:?} {reason} in monomial")]
    BadCentral { var: String, reason: &'static str },

    #[error("the involution does not preserve the quotient ideal")]
    InvolutionDoesNotDescend,

    #[error("grid solution {0} lies outside every known solution family")]
    CompletenessViolation(String),

    #[error("schema error at {path}: {msg}")]
    Schema { path: String, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
