use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("basis family is empty")]
    EmptyBases,
    #[error("bases have mixed cardinalities")]
    MixedCardinality,
    #[error("basis exchange fails: {0}")]
    ExchangeFailure(String),
    #[error("element not in ground set: {0}")]
    ElementNotInGroundSet(String),
    #[error("label collision: {0}")]
    LabelCollision(String),
    #[error("bad element label: {0:?}")]
    BadLabel(String),
    #[error("ground set too large: {0} elements exceeds limit {1}")]
    GroundSetOverflow(usize, usize),
    #[error("not a circuit-hyperplane: {0}")]
    NotACircuitHyperplane(String),
    #[error("not a free basis: {0}")]
    NotAFreeBasis(String),
    #[error("degenerate basepoint: {0}")]
    BasepointDegenerate(String),
    #[error("2-sum part too small: {0}")]
    PartTooSmall(String),
    #[error("invalid tree decomposition: {0}")]
    InvalidTree(String),
    #[error("matroid is not connected")]
    NotConnected,
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("bad spike rank: {0}")]
    BadRank(String),
    #[error("construction constraints unsatisfiable: {0}")]
    ConstraintUnsatisfiable(String),
    #[error("witness not found: {0}")]
    WitnessNotFound(String),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("syntax error at line {line}: {msg}")]
    SyntaxError { line: usize, msg: String },
    #[error("validation error: {0}")]
    ValidationError(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
