use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A connected component of odd order; no odd colouring exists.
    #[error("graph is not odd colourable: component {component:?} has odd order")]
    Infeasible { component: Vec<usize> },

    #[error("base graph yields a graph of odd order {order}")]
    InfeasibleOrder { order: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The input left the graph class: a connected subgraph in the recursion
    /// has neither pendant twins nor a light edge.
    #[error("no reduction witness (budget {budget}) in induced subgraph on {subgraph:?}")]
    ReductionNotFound { budget: usize, subgraph: Vec<usize> },

    #[error("graph is outside the algorithm's class: {0}")]
    ClassViolation(String),

    #[error("not a module partition: parts {first} and {second} are neither complete nor anticomplete")]
    NotModulePartition { first: usize, second: usize },

    #[error("invalid module partition: {0}")]
    InvalidModulePartition(String),

    #[error("module graph is not a star")]
    NotAStar,

    #[error("module graph is not a colour-propagating tree")]
    NotColourPropagating,

    #[error("module graph is not a tree")]
    NotATree,

    #[error("representation is not proper: interval of {outer} strictly contains interval of {inner}")]
    NotProper { outer: usize, inner: usize },

    #[error("interval representation disagrees with the graph on pair ({u}, {v})")]
    InconsistentRepresentation { u: usize, v: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has {n} vertices, above the exact-solver cap of {cap}")]
    SizeLimit { n: usize, cap: usize },

    /// An invariant the construction guarantees did not hold.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
