use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word entries must be positive (entry {index} is 0)")]
    NonPositiveEntry { index: usize },

    #[error("word {0} violates the Kunz conditions")]
    NotKunz(String),

    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },

    #[error("not the gap set of a numerical semigroup: {0}")]
    NotSemigroup(String),

    #[error("depth {0} is too small for this operation")]
    DepthTooSmall(u32),

    #[error("query describes an infinite family: {0}")]
    UnboundedQuery(&'static str),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "graph has {vertices} vertices; exhaustive homomorphism counting is limited to {limit}"
    )]
    GraphTooLarge { vertices: usize, limit: usize },

    #[error("maximum degree {max} exceeds the target degree {d}")]
    DegreeTooLarge { max: usize, d: usize },

    #[error("regularization did not reach a {d}-regular graph: {detail}")]
    RegularizeFailed { d: usize, detail: String },

    #[error("{0} is outside the supported range")]
    OutOfRange(String),

    #[error("reference data: {0}")]
    RefData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
