use alloc::string::String;

/// Errors raised by the combinatorial and algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial of degree {degree} exceeds the bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("polynomial is not representable in the binomial basis: {0}")]
    NotRepresentable(&'static str),

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("cell ({col}, {row}) lies outside the diagram")]
    CellOutside { col: usize, row: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not standard")]
    NotStandard,

    #[error("tableau is not quasi-Yamanouchi")]
    NotQuasiYamanouchi,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation is not restricted to the given partition")]
    NotRestricted,

    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),

    #[error("invalid board: {0}")]
    InvalidBoard(String),

    #[error("invalid dotted diagram: {0}")]
    InvalidDiagram(String),

    #[error("expansion is in the wrong basis: expected {0}")]
    WrongBasis(&'static str),

    #[error("integrity failure: {0}")]
    Integrity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
