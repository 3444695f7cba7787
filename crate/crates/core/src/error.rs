use thiserror::Error;

/// Errors raised by the algebra layer and the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} indeterminates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero polynomial has no leading term")]
    NoLeadingTerm,

    #[error("exact division left a nonzero remainder")]
    InexactDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("monomial is not a member of the given set")]
    NotAMember,

    #[error("nonmultiplicative variables of a monomial against itself are undefined")]
    SelfPair,

    #[error("basis is not minimal: leading monomial of element {divisor} divides that of element {multiple}")]
    NotMinimal { divisor: usize, multiple: usize },

    #[error("invalid permutation of length {0}")]
    InvalidPermutation(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
