use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("length {0} is not n(n-1)/2 for any n >= 2")]
    NotPairIndexed(usize),

    #[error("zero vector is not a valid {0}")]
    ZeroVector(&'static str),

    #[error("b-vector entries sum to {0}, expected 1")]
    BadBVectorSum(i64),

    #[error("invalid cut set: {0}")]
    InvalidCut(String),

    #[error("unsupported point count n = {n} (supported: {min}..={max})")]
    UnsupportedN { n: usize, min: usize, max: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group is not closed under composition")]
    GroupNotClosed,

    #[error("ray violates inequality {index} (value {value})")]
    NotInCone { index: usize, value: i128 },

    #[error("inequality is violated by ray {index} (value {value})")]
    InvalidInequality { index: usize, value: i128 },

    #[error("vector is not an extreme ray of the cone")]
    NotExtreme,

    #[error("inequality does not define a facet of the cone")]
    NotFacet,

    #[error("switching set does not lie on the facet (value {0})")]
    SwitchNotIncident(i128),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph: {0}")]
    InvalidGraph(String),

    #[error("cone too large for double description ({what}: {found} > {limit})")]
    TooLarge {
        what: &'static str,
        found: usize,
        limit: usize,
    },

    #[error("cone is not pointed (inequality matrix has rank {rank} < {dim})")]
    NotPointed { rank: usize, dim: usize },

    #[error("normalization slice of the cone is empty")]
    EmptySlice,

    #[error("integer overflow converting {0}")]
    Overflow(&'static str),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Assertion(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn assertion(msg: impl Into<String>) -> Self {
        Error::Assertion(msg.into())
    }
}
