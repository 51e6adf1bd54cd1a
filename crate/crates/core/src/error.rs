use thiserror::Error;

/// Errors raised by the library.
///
/// Coefficients are arbitrary-precision, so there is no overflow variant:
/// integer growth is never truncated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a partition: {0:?} is not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },

    /// A Schur coefficient came out non-integral. Always an internal bug.
    #[error("non-integral Schur coefficient {value} for s[{partition}]")]
    NonIntegral { partition: String, value: String },

    /// Input lies outside the range where a closed formula is proven.
    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("input must be homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("degree product {product} exceeds the cap {cap}")]
    CapExceeded { product: usize, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
