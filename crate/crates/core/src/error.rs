use std::fmt;

/// Errors raised by the engine. Every variant signals a caller-side
/// contract violation; nothing is silently normalized.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("letter {letter} out of range for permutations of size {size}")]
    LetterOutOfRange { letter: usize, size: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("prepending s_{0} does not shorten the word")]
    NoReductionPossible(usize),
    #[error("exchange property failed to find an index (implementation bug)")]
    NoSuchIndex,
    #[error("swap position {position} out of range for a list of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("source/target mismatch: {0}")]
    SourceTargetMismatch(String),
    #[error("list {0} is not linear")]
    NotLinear(String),
    #[error("lists {0} and {1} are not permutations of each other")]
    NotPermutationEquivalent(String, String),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("ill-typed term: {0}")]
    IllTyped(String),
    #[error("no object assigned to label {0}")]
    UnassignedLabel(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("target mismatch: {0}")]
    TargetMismatch(String),
    #[error("lift equation fails: {0}")]
    LiftEquationFails(String),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("square is not a pullback: {0}")]
    NotPullbackSquare(String),
    #[error("label {label} out of range (bound {bound})")]
    LabelOutOfRange { label: usize, bound: usize },
    #[error("invalid finite function: {0}")]
    InvalidFunction(String),
    #[error("lax law violation: {0}")]
    LaxLawViolation(String),
    #[error("model error: {0}")]
    Model(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn mismatch(what: impl fmt::Display) -> Error {
    Error::SourceTargetMismatch(what.to_string())
}
