use thiserror::Error;

pub type Result<T> = std::result::Result<T, CoxError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },

    #[error("matrix is not standard (d = {0}); standardize it first")]
    MustStandardizeFirst(String),

    #[error("presentation is not well-formed; run well-forming first")]
    NotWellFormed,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("effective cone spans the whole plane; no projective chamber sweep exists")]
    NotQuasiProjective,

    #[error("vector {0} lies outside the support of the fan")]
    OutsideSupport(String),

    #[error("no solution found: {0}")]
    NotFound(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An internal invariant failed; this indicates a bug rather than bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CoxError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        CoxError::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        CoxError::Parse {
            line,
            msg: msg.into(),
        }
    }
}
