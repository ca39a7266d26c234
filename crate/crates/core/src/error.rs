use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("instance size n={0} is invalid (need n >= 2)")]
    InvalidSize(usize),

    #[error("boat capacity b={0} is invalid (need b >= 1)")]
    InvalidCapacity(usize),

    #[error("instance size n={n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("budget exceeded: {what} (limit {limit})")]
    BudgetExceeded { what: &'static str, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid step {step}: {reason}")]
    InvalidStep { step: usize, reason: String },

    #[error("instance is infeasible: goal unreachable, component has {component} states")]
    Infeasible { component: usize },

    #[error("transition could not be classified: {0}")]
    Unclassifiable(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
