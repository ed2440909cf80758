use thiserror::Error;

/// Errors raised by graph builders, evaluators and the search driver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pair ({0}, {1}) is already an edge")]
    EdgePresent(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("graph is not saturated for the requested family")]
    NotSaturated,
    #[error("search order {order} exceeds the exhaustive cap {cap}")]
    SearchTooLarge { order: usize, cap: usize },
    #[error("shard {index} does not exist at depth {depth} ({available} prefixes)")]
    NoSuchShard {
        depth: usize,
        index: usize,
        available: usize,
    },
    #[error("grid of {0} points exceeds the 10^8 scan limit")]
    GridTooLarge(u128),
    #[error("canonical code is malformed")]
    MalformedCode,
}

pub type Result<T> = core::result::Result<T, Error>;
