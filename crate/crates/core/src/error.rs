use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("mixed-field operands")]
    MixedField,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("paths of length {cap} survive the quotient; raise max_path_length or check the algebra is finite-dimensional")]
    NonNilpotent { cap: usize },
    #[error("inhomogeneous relation: {0}")]
    InhomogeneousRelation(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("algebra is not self-injective")]
    NotSelfInjective,
    #[error("algebra is not symmetric")]
    NotSymmetric,
    #[error("algebra has no Gorenstein parameter")]
    NoGorensteinParameter,
    #[error("algebra is not positively graded")]
    NotPositivelyGraded,
    #[error("truncation is undefined for Z/{0}-graded modules")]
    TruncationUndefined(i64),
    #[error("cyclic grading order must be positive, got {0}")]
    InvalidCyclicOrder(i64),
    #[error("splitness warning: {0}")]
    SplitnessWarning(String),
    #[error("quiver is not of Dynkin type")]
    NonDynkin,
    #[error("AR closure did not terminate: {0}")]
    WindowNotClosed(String),
    #[error("modules live over different algebras or grading groups")]
    IncompatibleModules,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
