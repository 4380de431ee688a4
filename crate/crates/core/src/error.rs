use thiserror::Error;

use crate::reconfig::SequenceError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    Input(String),

    /// An exact procedure was asked to run on an instance above its size cap.
    #[error("{what}: instance size {size} exceeds cap {cap}")]
    Resource {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("sequence rejected: {0}")]
    Sequence(#[from] SequenceError),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Process exit code: 1 semantic failure, 2 input error, 3 resource cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Sequence(_) => 1,
            Error::Parse { .. } | Error::Input(_) => 2,
            Error::Resource { .. } => 3,
        }
    }
}

/// Fails with [`Error::Resource`] when `size > cap`.
pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::Resource { what, size, cap })
    } else {
        Ok(())
    }
}
