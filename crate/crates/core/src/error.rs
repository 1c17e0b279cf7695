use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph capacity exceeded: {requested} vertices (maximum {max})")]
    CapacityExceeded { requested: usize, max: usize },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge ({u}, {v}) not present")]
    MissingEdge { u: usize, v: usize },

    #[error("graph6: malformed header")]
    Graph6Header,

    #[error("graph6: vertex count {0} out of range (this crate handles at most 64)")]
    Graph6CountOutOfRange(usize),

    #[error("graph6: input truncated, expected {expected} payload bytes, found {found}")]
    Graph6Truncated { expected: usize, found: usize },

    #[error("graph6: trailing garbage after payload")]
    Graph6TrailingGarbage,

    #[error("graph6: invalid byte {byte:#04x} at offset {offset}")]
    Graph6InvalidByte { byte: u8, offset: usize },

    #[error("invalid construction parameters: {0}")]
    InvalidParameters(String),

    #[error("family must contain at least one forbidden minor")]
    EmptyFamily,

    #[error("family member {index} is empty after deleting isolated vertices")]
    EmptyFamilyMember { index: usize },

    #[error("family contains a star member ({0}); spex queries require a star-free family")]
    StarMember(String),

    #[error("input graph is not minor-free for the given family")]
    NotMinorFree,

    #[error("oracle size cap exceeded: host {host} vertices (cap {host_cap}), pattern {pattern} vertices (cap {pattern_cap})")]
    OracleCapExceeded {
        host: usize,
        host_cap: usize,
        pattern: usize,
        pattern_cap: usize,
    },

    #[error("vertex set is not a dominating set of the expected size")]
    BadDominatingSet,

    #[error("power iteration did not converge within {0} iterations (pathological tolerance?)")]
    NonConvergence(usize),

    #[error("graph must be connected with at least 2 vertices")]
    NotConnected,

    #[error("identity does not apply: graph is a cycle")]
    CycleInput,

    #[error(
        "search order {requested} exceeds the feasibility cap {cap}; pass the override to proceed"
    )]
    SearchCapExceeded { requested: usize, cap: usize },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("{0}")]
    Unsupported(String),
}
