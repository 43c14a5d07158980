use thiserror::Error;

/// Errors raised anywhere in the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid grading: {0}")]
    InvalidWeights(String),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("ring has {0} variables; at most {max} are supported", max = crate::monomial::MAX_VARS)]
    TooManyVariables(usize),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("coefficient error: {0}")]
    Coefficient(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("expected {expected} items, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("input is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("resource cap reached: {0}")]
    ResourceCap(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("job script error at line {line}: {msg}")]
    Script { line: usize, msg: String },
}

/// Process exit codes for the command-line front end.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const PRECONDITION: u8 = 3;
    pub const RESOURCE_CAP: u8 = 4;
    pub const INVARIANT: u8 = 5;
}

impl Error {
    /// Exit code of the class this error belongs to.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::InvalidField(_)
            | Error::DuplicateVariable(_)
            | Error::InvalidWeights(_)
            | Error::InvalidOrder(_)
            | Error::TooManyVariables(_)
            | Error::Syntax { .. }
            | Error::UnknownVariable(_)
            | Error::Coefficient(_)
            | Error::Script { .. } => exit::PARSE,
            Error::RingMismatch
            | Error::ArityMismatch { .. }
            | Error::Inhomogeneous(_)
            | Error::Precondition(_)
            | Error::Unsupported(_) => exit::PRECONDITION,
            Error::ResourceCap(_) => exit::RESOURCE_CAP,
            Error::Invariant(_) => exit::INVARIANT,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
