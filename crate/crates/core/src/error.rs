use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid step {step:?} at position {position}")]
    InvalidStep { step: char, position: usize },
    #[error("path leaves the first quadrant at step {0}")]
    LeavesQuadrant(usize),
    #[error("path traverses an edge twice at step {0}")]
    RevisitsEdge(usize),
    #[error("endpoints differ: {0:?} vs {1:?}")]
    EndpointMismatch((usize, u32), (usize, u32)),
    #[error("upper boundary dips below lower boundary at column {0}")]
    Dominance(usize),
    #[error("path is not weakly between the boundaries at column {0}")]
    OutsideRegion(usize),
    #[error("path has south steps")]
    NotMonotone,
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("word has no unmatched {0}")]
    NoUnmatched(char),
    #[error("{0} is not a base")]
    NotABase(String),
    #[error("oracle does not satisfy the matroid axioms: {0}")]
    NotAMatroid(String),
    #[error("elements {0} and {1} are not adjacent in the order")]
    NotAdjacent(usize, usize),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau still has path violations")]
    HasPathViolations,
    #[error("no {0} violation")]
    NoViolation(&'static str),
    #[error("the upper boundary must be a staircase N^y E^x")]
    NotStaircase,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
