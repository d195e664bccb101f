use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("leading term of the zero element is undefined")]
    ZeroElement,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("generator {index} is not contained in the module")]
    NotMember { index: usize },
    #[error("the module equals the ambient free module")]
    UnitModule,
    #[error("expected an ideal (rank 1), found rank {0}")]
    NotIdeal(usize),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("input is not a monomial ideal")]
    NonMonomial,
    #[error("primary component for {prime} not found within {bound} iterations")]
    IterationBound { prime: String, bound: usize },
    #[error("prime splitting did not converge: {0}")]
    SplittingFailed(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
