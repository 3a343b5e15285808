use thiserror::Error;

/// Errors raised by the invariant computations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// The root of unity order is outside the supported range.
    #[error("invalid root order r = {0}: need r ≥ 2, r ≢ 0 mod 4")]
    InvalidRoot(i64),

    /// A parameter lies outside the domain of the requested function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A sliced diagram does not compose.
    #[error("type error at slice {slice}: {message}")]
    Type { slice: usize, message: String },

    /// An endomorphism of a simple module failed to be a scalar.
    #[error("1-1 tangle is not scalar (residual {residual:.3e})")]
    NotScalar { residual: f64 },

    /// A surgery presentation is not computable.
    #[error("surgery presentation is not computable: {0}")]
    NotComputable(String),

    /// Integral edge grading where a generic (non-integral) one is required.
    #[error("non-generic grading: {0}")]
    NonGeneric(String),

    /// A diagrammatic move could not be realized on the given diagram.
    #[error("geometric failure: {0}")]
    Geometry(String),

    /// Malformed input data.
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
