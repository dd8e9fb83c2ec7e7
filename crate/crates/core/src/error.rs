use crate::expr::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("polynomial must be nonconstant ({0})")]
    Constant(&'static str),
    #[error("input is not squarefree; take the squarefree part first")]
    NotSquarefree,
    #[error("leading coefficient in Y must be a nonzero constant")]
    NonConstantLeadingCoefficient,
    #[error("graph factors disagree with the decomposition set: {0}")]
    GraphMismatch(String),
    #[error("x = {0} lies in the collision set Z_R")]
    InCollisionSet(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// True for failures of internal cross-checks rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::GraphMismatch(_) | Error::Invariant(_))
    }
}
