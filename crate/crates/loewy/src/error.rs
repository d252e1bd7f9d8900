use thiserror::Error;

/// Errors produced by lattice construction, queries and analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("duplicate element identifier `{0}`")]
    DuplicateElement(String),

    #[error("cover pair references undeclared element `{0}`")]
    UnknownElement(String),

    #[error("cover closure is not antisymmetric (cycle through `{0}`)")]
    Cycle(String),

    #[error("declared pair ({lower}, {upper}) is not a cover: {reason}")]
    NotACover {
        lower: String,
        upper: String,
        reason: &'static str,
    },

    #[error("lattice has no unique {0} element")]
    NoBound(&'static str),

    #[error("elements `{a}` and `{b}` have no unique {kind}")]
    NotALattice { a: String, b: String, kind: &'static str },

    #[error("element index {index} out of range for lattice of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("elements `{a}` and `{b}` are not comparable")]
    NotComparable { a: String, b: String },

    #[error("lattice size {size} exceeds cap {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("operation undefined on the 1-element lattice")]
    Degenerate,

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("unknown fixture name `{0}`")]
    UnknownName(String),

    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("socle recursion stalled below the top element")]
    Stall,
}

pub type Result<T> = std::result::Result<T, LatticeError>;
