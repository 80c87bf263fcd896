use alloc::string::String;

/// Errors raised by group constructions and class computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("order cap exceeded: {what} needs {needed}, cap is {cap}")]
    OrderCapExceeded {
        what: &'static str,
        needed: usize,
        cap: usize,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a section: {0}")]
    NotASection(&'static str),
    #[error("class `{0}` is not flagged as a formation")]
    NotAFormation(String),
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("centrality undecidable: {0}")]
    Undecidable(String),
    #[error("class `{0}` carries no canonical definition")]
    MissingDefinition(String),
    #[error("class `{class}` lacks required flag `{flag}`")]
    MissingFlag { class: String, flag: &'static str },
    #[error("unsupported base class: {0}")]
    UnsupportedBase(String),
    #[error("no qualifying group in corpus")]
    NoCandidate,
    #[error("no outer automorphism data for simple group of order {0}")]
    MissingOutData(u64),
    #[error("invalid rank specification: {0}")]
    InvalidRankSpec(String),
    #[error("centrality routes disagree: {0}")]
    RouteDisagreement(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = core::result::Result<T, Error>;
