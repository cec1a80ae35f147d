use thiserror::Error;

/// Errors produced by the library and the command-line front end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground-set size {0} out of range (expected 1..={max})", max = crate::simplicial::MAX_GROUND_SET)]
    GroundSetSize(usize),

    #[error("vertex {vertex} out of range for ground set [{m}]")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("empty facet list is ambiguous: set \"void\": true for the void complex or give [[]] for {{∅}}")]
    AmbiguousEmpty,

    #[error("cell budget exceeded: {needed} cells requested, budget is {budget}")]
    CellBudget { needed: u128, budget: usize },

    #[error("the cellular model needs m <= {max}, got m = {m}", max = crate::cw_homology::MAX_MODEL_GROUND_SET)]
    ModelGroundSet { m: usize },

    #[error("recursion budget exceeded: more than {0} recursion nodes")]
    NodeBudget(usize),

    #[error("dimension bound exceeded: n*m = {0} > 64")]
    DimensionBound(usize),

    #[error("n must be at least 1")]
    InvalidSphereDimension,

    #[error("{0} is not a supported prime")]
    InvalidPrime(u32),

    #[error("invalid sign vector {0:?}")]
    InvalidSignVector(String),

    #[error("invalid cell {0:?}")]
    InvalidCell(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("malformed complex file: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
