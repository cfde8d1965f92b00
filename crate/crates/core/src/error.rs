use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series order {have} is below the required order {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("not a delta indicator: constant term must vanish and the linear coefficient must be nonzero")]
    NotADeltaIndicator,
    #[error("linear coefficient of the series is not a scalar")]
    NonScalarLeadingCoefficient,
    #[error("{what} of size {size} exceeds the enumeration limit {limit}")]
    SizeLimitExceeded { what: &'static str, size: u128, limit: u128 },
    #[error("partitions live on different ground sets ([{left}] vs [{right}])")]
    GroundSetMismatch { left: usize, right: usize },
    #[error("first partition does not refine the second")]
    NotRefinement,
    #[error("grid has {have} nodes, {need} required")]
    GridTooShort { have: usize, need: usize },
    #[error("sequence has {have} entries, {need} required")]
    SequenceTooShort { have: usize, need: usize },
    #[error("sequence is not of binomial type (first failure at n = {n})")]
    NotBinomialType { n: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("internal cross-check failed: {0}")]
    InternalCrossCheckFailure(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}
