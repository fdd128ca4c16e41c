use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("path `{0}` is not composable")]
    NotComposable(String),
    #[error("relation `{0}` has a path of length < 2")]
    ShortRelation(String),
    #[error("relation `{0}` mixes paths with different endpoints")]
    NotParallel(String),
    #[error("ideal is not admissible: normal forms do not stabilize below length cap {0}")]
    NotAdmissible(usize),
    #[error("walk `{0}` is zero in the algebra, no uniserial module")]
    ZeroPrefix(String),
    #[error("ambiguous walk: several arrows from {0} to {1}")]
    AmbiguousWalk(String, String),
    #[error("no arrow from {0} to {1}")]
    MissingArrow(String, String),
    #[error("representation shape mismatch: {0}")]
    Shape(String),
    #[error("invalid module literal: {0}")]
    Literal(String),
    #[error("summand is in Fac of the remaining summands; not a left mutation")]
    NotLeftMutable,
    #[error("mutation invariant violated: {0}")]
    MutationInvariant(String),
    #[error("node cap {0} exceeded; poset is partial")]
    CapExceeded(usize),
    #[error("enumeration incomplete; result cannot be certified")]
    Incomplete,
    #[error("expected exactly {expected} {what}, found {found}")]
    Count { what: String, expected: usize, found: usize },
    #[error("Ext^1(S, Y) is nonzero")]
    ExtNonzero,
    #[error("tau-rigidity oracles disagree")]
    OracleDisagreement,
    #[error("highlight set is not a subset of the poset nodes")]
    HighlightNotSubset,
    #[error("not a pair over this algebra: {0}")]
    InvalidPair(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
