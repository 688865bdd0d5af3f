use std::fmt;

/// Error taxonomy shared by all modules.
///
/// `Input` is a violated precondition, `Capability` is a configured bound
/// that refuses the instance rather than subsampling it, and `Invariant` is
/// a structural claim that failed at runtime (always a bug, never a
/// user error).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Input(String),
    Capability(String),
    Invariant(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// Process exit code used by the CLI for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 2,
            Error::Capability(_) => 3,
            Error::Invariant(_) => 4,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "input error: {msg}"),
            Error::Capability(msg) => write!(f, "capability error: {msg}"),
            Error::Invariant(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
