use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Cartan matrix is not of finite type; failing principal submatrix on nodes {nodes:?}: {matrix:?}")]
    NotFiniteType { nodes: Vec<usize>, matrix: Vec<Vec<i64>> },
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("invalid real form: {0}")]
    InvalidRealForm(String),
    #[error("weight is not dominant: pairing with coroot {coroot:?} is {value}")]
    NotDominant { coroot: Vec<i64>, value: String },
    #[error("weight is not integral: {0}")]
    NotIntegral(String),
    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: String, cap: usize },
    #[error("no invariant Hermitian form: {0}")]
    NoForm(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that indicate a bug or corrupted data rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

macro_rules! ensure_internal {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err($crate::error::Error::Internal(format!($($arg)*)));
        }
    };
}
pub(crate) use ensure_internal;
