use alloc::string::String;

use crate::graph::Edge;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the core operations.
///
/// Variants are grouped by what the caller did wrong: malformed graphs and
/// colorings, violated preconditions, exhausted search budgets, and
/// internal invariant failures (which indicate a bug, never bad input).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Edge),
    #[error("{0:?} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("coloring does not match the host edge set: {0}")]
    ColoringMismatch(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not {expected}-regular")]
    NotRegular { expected: usize },
    #[error("graph has {n} vertices, more than the supported {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("search cancelled")]
    Cancelled,
    #[error("no n <= {cap} with K_n arrowing the pair")]
    CapExceeded { cap: usize },
    #[error("search failed after {trials} trials: {detail}")]
    SearchExhausted { trials: u32, detail: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// True for the "ran out of budget" family, which callers usually report
    /// as indeterminate rather than as a failure.
    pub fn is_indeterminate(&self) -> bool {
        matches!(self, Error::BudgetExhausted { .. } | Error::Cancelled)
    }
}
