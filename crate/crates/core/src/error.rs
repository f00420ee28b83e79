use thiserror::Error;

/// Crate-wide error type. The variants map onto CLI exit codes:
/// `Input`/`Parse`/`Refused` are caller mistakes (exit 2), `Budget` means a
/// search ran out of its node budget (exit 3), and `Invariant` signals a bug
/// (exit 4).
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("invariant violation (bug): {0}")]
    Invariant(String),
    #[error("refused: {0}")]
    Refused(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Parse { .. } | Error::Refused(_) => 2,
            Error::Budget(_) => 3,
            Error::Invariant(_) => 4,
        }
    }
}
