use parbetti::Error as EngineError;
use thiserror::Error;

/// Exit status for bad input or an unusable request.
pub const EXIT_INVALID: i32 = 1;
/// Exit status when semistable and stable loci differ and `--force` is off.
pub const EXIT_SEMISTABLE: i32 = 2;
/// Exit status for failed internal cross-checks.
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed instance document: {0}")]
    Parse(String),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("methods disagree: {0}")]
    Disagreement(String),
}

impl CliError {
    pub fn field(field: impl Into<String>, message: impl ToString) -> Self {
        CliError::Field { field: field.into(), message: message.to_string() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) | CliError::Field { .. } | CliError::Usage(_) => EXIT_INVALID,
            CliError::Disagreement(_) => EXIT_INTERNAL,
            CliError::Engine(e) => engine_exit_code(e),
        }
    }
}

pub fn engine_exit_code(e: &EngineError) -> i32 {
    match e {
        EngineError::InvalidData(_)
        | EngineError::MethodInapplicable(_)
        | EngineError::TruncationTooLarge { .. }
        | EngineError::UnsupportedPower => EXIT_INVALID,
        EngineError::StrictSemistable { .. } | EngineError::IntegralPsi(_) => EXIT_SEMISTABLE,
        _ => EXIT_INTERNAL,
    }
}
