use std::path::PathBuf;

/// Errors of the file formats, the catalog and the command line.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] frlab_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown constructor `{0}`")]
    UnknownConstructor(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown tier `{0}`")]
    UnknownTier(String),
    #[error("unknown rank specification `{0}`")]
    UnknownRank(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    /// Process exit code: 3 for cap exceedance, 2 for every other input or
    /// configuration error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Group(frlab_core::Error::OrderCapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}
