//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input points span a line (or fewer than three distinct points).
    #[error("points do not span a convex polygon")]
    NotConvex,
    /// The polygon does not contain the origin in its strict interior.
    #[error("origin is not strictly interior to the polygon")]
    OriginNotInterior,
    /// A polygon vertex is not a primitive lattice vector.
    #[error("vertex {0} is not primitive")]
    NonPrimitiveVertex(String),
    /// Two cone generators are linearly dependent.
    #[error("cone generators are linearly dependent")]
    DegenerateCone,
    /// The operation is undefined for the smooth type 1/1(1,0).
    #[error("operation is undefined for the smooth type 1/1(1,0)")]
    SmoothType,
    /// Milnor numbers are defined for T-singularities only.
    #[error("{0} is not a T-singularity")]
    NotTSingularity(String),
    /// Residual slot index out of range in a cone decomposition.
    #[error("slot m={m} out of range (n={n})")]
    SlotOutOfRange { m: usize, n: usize },
    /// The Noether identity applies only to polygons with empty basket.
    #[error("residual basket is nonempty")]
    NonEmptyBasket,
    /// A singularity type violating 0 < r, gcd(r,a) = gcd(r,b) = 1.
    #[error("invalid singularity type: {0}")]
    InvalidType(String),
    /// Text or JSON input could not be parsed. `position` is a byte offset.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
