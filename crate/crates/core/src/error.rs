use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is not an n x n matrix over 0..{n}: {detail}")]
    MalformedTable { n: usize, detail: String },
    #[error("not a Latin square: {line} {index} repeats element {element}")]
    NotLatinSquare {
        line: &'static str,
        index: usize,
        element: usize,
    },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("non-associative triple (a,b,c) = ({a},{b},{c})")]
    NonAssociative { a: usize, b: usize, c: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("size limit {limit} exceeded ({partial} elements found so far)")]
    SizeLimit { limit: usize, partial: usize },

    #[error("set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: conjugating by {witness} moves it")]
    NotNormal { witness: usize },

    #[error("unknown group family '{0}'")]
    UnknownFamily(String),
    #[error("bad parameter for {family}: {detail}")]
    BadParameter { family: String, detail: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("cover does not contain element {missing} of a group of order {order}")]
    NotACover { missing: usize, order: usize },
    #[error("sets and group disagree on order: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("group is Abelian; the non-commuting Schur number is undefined")]
    AbelianGroup,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("epsilon {epsilon} exceeds the commuting probability {c}")]
    EpsilonTooLarge { epsilon: String, c: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
