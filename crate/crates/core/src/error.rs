//! Error type shared across the crate.

use std::fmt;

use crate::staircase::LabelingViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation that needs at least one vertex was given the empty tree.
    EmptyTree,
    /// Arity outside the supported range (k must be >= 1).
    InvalidArity(usize),
    /// Two objects that must share an arity do not.
    ArityMismatch { expected: usize, found: usize },
    /// A tree code failed to parse; `position` is a byte offset into the code.
    Parse { position: usize, message: String },
    /// A staircase array violates its shape rules.
    MalformedArray(String),
    /// A labeling does not have one label per vertex.
    LabelCountMismatch { vertices: usize, labels: usize },
    /// A labeled tree violates one of the staircase labeling rules.
    InvalidLabeling(LabelingViolation),
    /// An enumeration would exceed the configured work guard.
    GuardExceeded {
        task: String,
        estimate: String,
        cap: u64,
    },
    /// A brute-force computation was asked to exceed its size cap.
    BruteForceCapExceeded { size: usize, cap: usize },
    /// Anything else the caller got wrong.
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyTree => write!(f, "operation requires a nonempty tree"),
            Error::InvalidArity(k) => write!(f, "arity must be at least 1, got {k}"),
            Error::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected}, found {found}")
            }
            Error::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::MalformedArray(msg) => write!(f, "malformed staircase array: {msg}"),
            Error::LabelCountMismatch { vertices, labels } => write!(
                f,
                "labeling has {labels} labels but the tree has {vertices} vertices"
            ),
            Error::InvalidLabeling(v) => write!(f, "invalid staircase labeling: {v}"),
            Error::GuardExceeded {
                task,
                estimate,
                cap,
            } => write!(
                f,
                "work guard exceeded for {task}: estimated {estimate} objects, cap is {cap}"
            ),
            Error::BruteForceCapExceeded { size, cap } => {
                write!(f, "brute force cap exceeded: {size} vertices, cap is {cap}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<LabelingViolation> for Error {
    fn from(v: LabelingViolation) -> Self {
        Error::InvalidLabeling(v)
    }
}
