use thiserror::Error;

/// Errors raised by graph construction, parsing and the dimension routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("bad parameters for `{name}`: {msg}")]
    BadParams { name: String, msg: String },
    #[error("{n} vertices exceed the brute-force cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("constraint {0} is empty, instance is infeasible")]
    Infeasible(usize),
    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(usize),
    #[error("root set must be non-empty")]
    EmptyRoots,
    #[error("bound requires more than one root")]
    RequiresMultipleRoots,
    #[error("rooted paths are excluded")]
    RootedPathExcluded,
    #[error("second factor must have at least two vertices")]
    HTooSmall,
    #[error("bridge-cycle graph needs at least 3 components, got {0}")]
    TooFewComponents(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
