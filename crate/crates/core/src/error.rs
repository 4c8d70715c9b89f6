use thiserror::Error;

/// Errors raised while building or transforming a [`Graph`](crate::Graph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("permutation of length {got} does not match graph order {order}")]
    BadPermutation { got: usize, order: usize },
    #[error("invalid parameters for {family}: {reason}")]
    BadParameters {
        family: &'static str,
        reason: String,
    },
}

/// graph6 decoding/encoding failures. Each malformation has its own variant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("graph6 size prefix encodes an order above 62 (long-form sizes are not supported)")]
    UnsupportedOrder,
    #[error("graph6 body too short: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 body has {extra} trailing byte(s)")]
    TrailingData { extra: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("graph of order {0} cannot be written as single-byte graph6 (max 62)")]
    OrderTooLarge(usize),
}

/// Edge-list text format failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("declared {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Resource limits hit by the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph order {order} exceeds the limit {limit} for {what}")]
    OrderLimit {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("edge count {edges} exceeds the limit {limit} for {what}")]
    EdgeLimit {
        what: &'static str,
        edges: usize,
        limit: usize,
    },
    #[error("more than {cap} maximum independent sets; raise the cap to continue")]
    OmegaCapExceeded { cap: usize },
    #[error("{0} is undefined on the empty graph")]
    EmptyGraph(&'static str),
    #[error("catalog order {order} is outside 1..={max}")]
    CatalogOrder { order: usize, max: usize },
    #[error("too many components ({0}) to enumerate bipartitions")]
    TooManyComponents(usize),
}
