use std::fmt;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_ORACLE: i32 = 4;

/// A failure that ends a command with a nonzero exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError { code: EXIT_PARSE, message: message.into() }
    }

    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<crate::dto::DtoError> for CliError {
    fn from(e: crate::dto::DtoError) -> Self {
        CliError::parse(e.0)
    }
}

/// Core errors on input data: shape problems are parse errors, everything else is an
/// invariant violation of the input.
impl From<pqh_core::Error> for CliError {
    fn from(e: pqh_core::Error) -> Self {
        match e {
            pqh_core::Error::BadShape { .. } | pqh_core::Error::DimensionMismatch { .. } => CliError::parse(e.to_string()),
            _ => CliError::input(e.to_string()),
        }
    }
}
