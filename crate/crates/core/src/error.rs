use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate attribute `{0}`")]
    DuplicateAttribute(String),
    #[error("attribute names must be non-empty")]
    EmptyName,
    #[error("a universe needs at least one attribute")]
    EmptyUniverse,
    #[error("operands are drawn from different universes")]
    UniverseMismatch,
    #[error("attribute index {index} out of range for a universe of {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("a pair with left side {{{0}}} already exists")]
    DuplicateLeft(String),
    #[error("{what}: size {actual} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
    },
    #[error("{{{0}}} is not closed")]
    NotClosed(String),
    #[error("{{{0}}} is not a member of the hereditary collection")]
    NotIndependent(String),
    #[error("{0} is not a subset of the closure table")]
    NotSubsetOfMu(String),
    #[error("sets have different closures")]
    UnequalClosures,
    #[error("pair {0} does not belong to the closure its function generates")]
    NotACover(String),
    #[error("no pair of the cover has right side {{{0}}}")]
    EmptyTop(String),
    #[error("closure of {{{set}}} is {{{closure}}}, expected {{{expected}}}")]
    ClosureMismatch {
        set: String,
        closure: String,
        expected: String,
    },
    #[error("{{{from}}} does not directly determine {{{to}}}")]
    NoDirectDetermination { from: String, to: String },
    #[error("pair mismatch: {0}")]
    PairMismatch(String),
    #[error("function is not a nonredundant cover")]
    NotNonredundantCover,
    #[error("pair {0} is not in the closure table")]
    PairNotInMu(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("line {line}: unknown attribute `{name}`")]
    UnknownAttribute { name: String, line: usize },
    #[error("line {line}: {message}")]
    SyntaxError { line: usize, message: String },
    #[error("missing `attrs:` header line")]
    MissingHeader,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, actual: usize, cap: usize) -> Self {
        Error::CapExceeded { what, actual, cap }
    }
}
