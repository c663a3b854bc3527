use thiserror::Error;

/// Errors produced by the path, word, polynomial and maximizer operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty step word")]
    EmptyWord,
    #[error("unexpected character {ch:?} at position {position}")]
    BadCharacter { ch: char, position: usize },
    #[error("unbalanced word: {ups} up-steps and {downs} down-steps")]
    UnbalancedWord { ups: usize, downs: usize },
    #[error("word dips below the axis after step {position}")]
    NegativePrefix { position: usize },
    #[error("semilength mismatch: {left} vs {right}")]
    SemilengthMismatch { left: usize, right: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not a permutation of 1..={n}: {entries:?}")]
    InvalidPermutation { n: usize, entries: Vec<usize> },
    #[error("invalid composition: {0:?}")]
    InvalidComposition(Vec<u32>),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("semilength {n} exceeds the brute-force bound {bound}")]
    BruteForceBoundExceeded { n: usize, bound: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("no valley at step index {index}")]
    NotAValley { index: usize },
    #[error("valley labels out of order: up-step {up}, down-step {down}")]
    LabelOrderViolated { up: u32, down: u32 },
    #[error("{b} is not in the compatible set of {d}")]
    NotInBSet { d: String, b: String },
    #[error("relations contain a cycle through a{0}")]
    CyclicRelation(usize),
    #[error("choice k = {k} is not admissible at step {step} (admissible: {admissible:?})")]
    InvalidChoice { step: usize, k: usize, admissible: Vec<usize> },
}

pub type Result<T> = std::result::Result<T, Error>;
