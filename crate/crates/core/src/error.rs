use thiserror::Error;

/// Errors raised by graph queries, decompositions and oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {0} does not exist")]
    UnknownVertex(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph is not a tree")]
    NotATree,
    #[error("formula does not apply to this type of unicyclic graph")]
    WrongType,
    #[error("graph of order {n} exceeds the oracle limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("internal invariant violated: {0}")]
    InvariantViolated(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
