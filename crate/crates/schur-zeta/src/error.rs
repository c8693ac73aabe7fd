use thiserror::Error;

/// Domain and precondition failures of the numeric evaluators.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum EvalError {
    #[error("argument outside domain: {0}")]
    OutOfDomain(String),
    #[error("divergent configuration: {0}")]
    Divergent(String),
    #[error("unsupported shape for this evaluator: {0}")]
    Unsupported(String),
}
