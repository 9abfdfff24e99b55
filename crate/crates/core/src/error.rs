use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeterMatrix(String),
    #[error("Coxeter matrix is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartanMatrix(String),
    #[error("unknown type label `{0}`")]
    UnknownLabel(String),
    #[error("type `{0}` is not crystallographic")]
    NotCrystallographic(String),
    #[error("group enumeration exceeded the bound of {0} elements")]
    GroupTooLarge(usize),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("the zero vector has no primitive part")]
    ZeroVector,
    #[error("coefficient field does not contain 2cos(pi/{0})")]
    FieldTooSmall(u32),
    #[error("face oracle is not closed under subsets: {0}")]
    InconsistentFaceOracle(String),
    #[error("quotient ring is still nonzero in degree {0}")]
    DegreeCapExceeded(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Errors caused by bad input rather than by an arithmetic inconsistency.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Internal(_) | Error::DegreeCapExceeded(_))
    }
}
