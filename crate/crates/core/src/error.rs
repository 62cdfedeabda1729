use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("degenerate: {0}")]
    DegenerateInstance(String),

    #[error("odd order: T({n},{m},{r}) has {} vertices and no perfect matching", n * m)]
    OddOrder { n: usize, m: usize, r: usize },

    #[error("column band undefined: the torus has only {0} I-cycle")]
    BandUndefined(usize),

    #[error("not a perfect matching: {0}")]
    NotAMatching(String),

    #[error("graph has no perfect matching")]
    NoPerfectMatching,

    #[error("vertex budget exceeded: {vertices} vertices > budget {budget}")]
    BudgetExceeded { vertices: usize, budget: usize },

    #[error("wrong class: {0}")]
    WrongClass(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("marked vertex set is not independent ({0} and {1} are adjacent)")]
    NotIndependent(usize, usize),

    #[error("cycle interior is not simply connected")]
    NotSimplyConnected,

    #[error("marking search exhausted without success: {0}")]
    SearchExhausted(String),

    #[error("instance too large for the solver: {0}")]
    TooLarge(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
