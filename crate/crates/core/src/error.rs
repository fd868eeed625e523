use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Game parameters that violate a family's constraints.
    #[error("invalid game spec: {0}")]
    InvalidSpec(String),

    /// A position whose shape does not match the spec it is used with.
    #[error("position does not match spec: {0}")]
    Shape(String),

    /// A formula or operation applied outside its domain.
    #[error("{0}")]
    Domain(String),

    /// A box or search that would exceed the configured memory budget.
    #[error(
        "box with {positions} positions needs {needed} bytes, budget is {budget} bytes \
         (set {env} to raise it)",
        env = crate::engine::MEMORY_BUDGET_ENV
    )]
    Resource {
        positions: u128,
        needed: u128,
        budget: u64,
    },

    /// A violated internal invariant. Indicates a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
