use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be between 1 and {max}, got {n}")]
    InvalidRank { n: usize, max: usize },
    #[error("generator {index} out of range for rank {n}")]
    LetterOutOfRange { index: usize, n: usize },
    #[error("braid order is undefined for a generator paired with itself ({0})")]
    EqualGenerators(usize),
    #[error("commutation class exceeds the cap of {cap} words")]
    ClassTooLarge { cap: usize },
    #[error("{0} is not a reduced word of a fully commutative element")]
    NotReducedFc(String),
    #[error("invalid normal form: {0}")]
    InvalidNormalForm(String),
    #[error("invalid blocks: {0}")]
    InvalidBlocks(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(String, String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown format {0:?}")]
    UnknownFormat(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
