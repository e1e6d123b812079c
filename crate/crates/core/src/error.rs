use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// The variants map onto the CLI exit-code contract through [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    /// Input object violates an invariant of its type.
    #[error("validation error: {0}")]
    Validation(String),

    /// An enumeration would exceed the configured step budget.
    #[error("budget exceeded: {what} needs more than {limit} steps")]
    BudgetExceeded { what: &'static str, limit: u64 },

    /// Two independent computation routes produced different answers.
    #[error("internal disagreement: {0}")]
    Disagreement(String),

    #[error("unknown character `{0}`")]
    UnknownCharacter(String),

    /// A coloring count was requested for a cyclic orientation.
    #[error("orientation is cyclic")]
    CyclicOrientation,

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn disagreement(msg: impl Into<String>) -> Self {
        Error::Disagreement(msg.into())
    }

    /// Process exit code: 2 validation, 3 budget, 4 certificate failure, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) | Error::UnknownCharacter(_) | Error::Json(_) => 2,
            Error::CyclicOrientation => 2,
            Error::BudgetExceeded { .. } => 3,
            Error::Disagreement(_) => 4,
            Error::Io(_) => 1,
        }
    }
}
