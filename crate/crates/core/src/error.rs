use thiserror::Error;

/// Errors raised while building lattices or computing with nuclei on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("cover relation has a cycle through `{0}`")]
    CyclicCovers(String),

    #[error("not a lattice: `{0}` and `{1}` have no {2}")]
    NotALattice(String, String, &'static str),

    #[error("no unique top element")]
    NoBoundedTop,

    #[error("no unique bottom element")]
    NoBoundedBottom,

    #[error("empty lattice")]
    Empty,

    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("element `{x}` is not in the interval [{lo},{hi}]")]
    OutOfInterval { x: String, lo: String, hi: String },

    #[error("`{lo}` is not below `{hi}`, so [{lo},{hi}] is not an interval")]
    NotAnInterval { lo: String, hi: String },

    #[error("lattice has {size} elements, above the enumeration cap of {cap}")]
    SizeCapExceeded { size: usize, cap: usize },

    #[error("map is not a nucleus: {0}")]
    NotANucleus(String),

    #[error("map is not a prenucleus: {0}")]
    NotAPrenucleus(String),

    #[error("not a division set: {0}")]
    NotADivisionSet(String),

    #[error("not a free set: {0}")]
    NotAFreeSet(String),

    #[error("element set does not contain the top element")]
    MissingTop,

    #[error("induced map is not a nucleus: {0}")]
    NotAFreeSeed(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("independent computations disagree: {0}")]
    InternalDisagreement(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
