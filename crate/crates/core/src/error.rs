use thiserror::Error;

/// Errors raised by the library. The variants fall into three families that the
/// command-line tool maps to distinct exit codes: input/validation problems,
/// semantic failures (the input is well formed but does not have the property an
/// operation needs), and internal invariant violations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("not image-binary{}", witness_suffix(.witness, .value))]
    NotImageBinary {
        witness: Option<String>,
        value: Option<String>,
    },
    #[error("{0}")]
    Semantic(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

fn witness_suffix(witness: &Option<String>, value: &Option<String>) -> String {
    match (witness, value) {
        (Some(w), Some(v)) => format!(" (witness \"{w}\" has value {v})"),
        (Some(w), None) => format!(" (witness \"{w}\")"),
        _ => String::new(),
    }
}

impl Error {
    /// True for errors caused by malformed or inconsistent input.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::UnknownLetter(_) | Error::AlphabetMismatch(_) | Error::Dimension(_) | Error::Invalid(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
