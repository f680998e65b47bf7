use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    Index { vertex: usize, order: usize },
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("pair query on identical vertices ({0}, {0})")]
    DegeneratePair(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("invalid family spec: {0}")]
    Spec(String),
    #[error("no connected graph drawn after {attempts} attempts (n = {n}, p = {p})")]
    Generation { n: usize, p: f64, attempts: usize },
    #[error("graph of order {order} exceeds the exhaustive limit {limit}")]
    Size { order: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
