use crate::coeff::SolveError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("ambient error: {0}")]
    Ambient(String),
    #[error("operands live in different algebras: {0}")]
    AmbientMismatch(String),
    #[error("generators are already in normal order")]
    InOrder,
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("minor is too small for expansion (t = {0})")]
    TooSmall(usize),
    #[error("index set collision: {0}")]
    Collision(String),
    #[error("input is not a relation: {0}")]
    NotARelation(String),
    #[error("extended relation does not vanish: {0}")]
    ExtensionFailed(String),
    #[error("element is not in the span of the standard monomials")]
    NotInSpan,
    #[error("standard monomials are linearly dependent (rank {rank} of {count})")]
    RankDeficient { rank: usize, count: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

pub type Result<T> = std::result::Result<T, Error>;
