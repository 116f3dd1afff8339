use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),

    #[error("mismatched vertex context: {0}")]
    ContextMismatch(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("coefficient overflow in exact integer arithmetic")]
    Overflow,

    /// Search gave up before settling the answer. The chromatic number is
    /// known to lie in `lower..=upper`.
    #[error("node budget exhausted; chromatic number lies in [{lower}, {upper}]")]
    BudgetExhausted { lower: u32, upper: u32 },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("empty complex input")]
    EmptyInput,

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code for the CLI: 2 malformed input, 3 budget,
    /// 4 internal invariant violation, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MalformedInput(_) | Error::UnknownVertex(_) | Error::EmptyInput => 2,
            Error::BudgetExhausted { .. } => 3,
            Error::Internal(_) => 4,
            _ => 1,
        }
    }
}
