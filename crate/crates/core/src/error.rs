use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: i64, rank: usize },
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error("unknown curve `{curve}` in model `{model}`")]
    UnknownCurve { model: String, curve: String },
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("model `{0}` only carries a homology action")]
    HomologyOnlyModel(String),
    #[error("element has infinite order")]
    InfiniteOrder,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
