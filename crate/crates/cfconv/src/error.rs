use std::io;

use cfconv_core::{ConvolutionError, GuessError, Rational};

/// Everything the CLI can fail with, grouped by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags, unreadable input, or text that does not parse.
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    /// `guess` found no recurrence within the requested bound.
    #[error("{0}")]
    NotFound(GuessError),
    /// A proven bound was violated or the guard check failed: a bug.
    #[error("{context}: {source}")]
    Internal { context: String, source: ConvolutionError },
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::NotFound(_) => 2,
            CliError::Internal { .. } => 3,
        }
    }

    /// Terms to dump alongside an internal-consistency failure.
    pub fn offending_terms(&self) -> Option<&[Rational]> {
        match self {
            CliError::Internal { source, .. } => Some(source.terms()),
            _ => None,
        }
    }
}

/// Classifies a convolution failure: bad operands are the caller's fault,
/// anything else is internal.
pub fn convolution_error(context: impl Into<String>, err: ConvolutionError) -> CliError {
    let context = context.into();
    if err.is_internal() {
        CliError::Internal { context, source: err }
    } else {
        CliError::Usage(format!("{context}: {err}"))
    }
}
