use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable orders differ")]
    OrderMismatch,
    #[error("invalid variable order: {0}")]
    InvalidOrder(String),
    #[error("invalid modulus {modulus}: {reason}")]
    InvalidModulus { modulus: u64, reason: &'static str },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("degenerate resultant: both arguments have degree 0 in {var}")]
    DegenerateResultant { var: String },
    #[error("empty input")]
    EmptyInput,
    #[error("the zero polynomial has no rank")]
    ZeroRank,
    #[error("all generators are zero")]
    ZeroIdeal,
    #[error("not a triangular set: {0}")]
    NotTriangular(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("variable order assumption violated: parameter {parameter} is above leading variable {leading}")]
    OrderAssumption { parameter: String, leading: String },
    #[error("structural violation: {0}")]
    StructuralViolation(String),
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),
    #[error("variable order did not stabilise after {passes} reorder passes")]
    OrderUnstable { passes: usize },
    #[error("node budget of {0} exhausted")]
    NodeBudget(usize),
    #[error("coefficient {0} has no image in the target field")]
    CoefficientMap(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
