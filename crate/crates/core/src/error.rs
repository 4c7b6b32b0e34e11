use thiserror::Error;

/// Errors raised by the exact constructions and the numeric checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("polynomial has non-real coefficients")]
    ComplexCoefficients,

    #[error("scale factor must be nonzero")]
    ZeroScale,

    #[error("unknown system `{0}`")]
    UnknownSystem(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("N = {n} is smaller than max(D) = {max}")]
    NTooSmall { n: i64, max: u32 },

    #[error("index set would contain a negative index")]
    NegativeIndex,

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("non-generic parameter: {0}")]
    NonGenericParameter(String),

    #[error("singular point near x = {0}")]
    SingularPoint(f64),

    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;
