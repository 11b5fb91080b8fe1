use std::fmt;

/// Errors reported by the counting library.
///
/// The three variants matter to callers in different ways: `Domain` means the
/// input violated a documented precondition, `SieveLimit` means a Möbius value
/// was requested beyond the table built by the caller (tables never resieve
/// silently), and `EnumerationLimit` means a subset enumeration was refused
/// because 2^|A| would be too large.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the inputs was violated.
    Domain(String),
    /// mu(d) was requested for d beyond the table limit.
    SieveLimit { requested: u64, limit: u64 },
    /// The set is too large to enumerate all of its subsets.
    EnumerationLimit { size: usize, limit: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for the limit-style failures (`SieveLimit`, `EnumerationLimit`),
    /// false for plain domain errors. The CLI maps the former to exit 3 and
    /// the latter to exit 2.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::SieveLimit { .. } | Error::EnumerationLimit { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "{msg}"),
            Error::SieveLimit { requested, limit } => {
                write!(f, "mu({requested}) requested but table limit is {limit}")
            }
            Error::EnumerationLimit { size, limit } => {
                write!(f, "set of size {size} exceeds enumeration limit {limit}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
