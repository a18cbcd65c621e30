use thiserror::Error;

use crate::geometry::DepthCertificate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed family document: {0}")]
    Schema(String),

    #[error("family dimension must be at least 1")]
    ZeroDimension,

    #[error("box {index} axis {axis}: lo {lo} > hi {hi}")]
    InvertedInterval {
        index: usize,
        axis: usize,
        lo: i64,
        hi: i64,
    },

    #[error("box {index} has {found} intervals but the family dimension is {dim}")]
    DimensionMismatch { index: usize, found: usize, dim: usize },

    #[error("boxes of dimension {left} and {right} cannot be compared")]
    IncomparableBoxes { left: usize, right: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("operation requires a nonempty family")]
    EmptyFamily,

    #[error("{0}")]
    OutOfRange(String),

    #[error("axis {axis}: boxes {first} and {second} share the upper endpoint {value}")]
    DuplicateUpperEndpoint {
        axis: usize,
        first: usize,
        second: usize,
        value: i64,
    },

    #[error("depth {} exceeds k = {k}", witness.members.len())]
    DepthExceeded { k: u64, witness: DepthCertificate },

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("vertex {0} appears in both sets")]
    Overlap(usize),
}
