use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The semilength was zero where a nonempty path is required.
    #[error("semilength must be positive")]
    ZeroSemilength,

    /// A word of odd length cannot be balanced.
    #[error("word length {0} is odd")]
    OddLength(usize),

    /// A step symbol other than '0'/'1' (or 0/1) was encountered.
    #[error("invalid step symbol {symbol:?} at index {index}")]
    InvalidSymbol { index: usize, symbol: char },

    /// The path dips below the x-axis; `0` is the first offending step.
    #[error("height drops below zero after step {0}")]
    NegativePrefix(usize),

    /// Up-steps and down-steps do not balance out.
    #[error("unbalanced word: {ups} up-steps, {downs} down-steps")]
    Unbalanced { ups: usize, downs: usize },

    /// A size cap protecting memory/time was exceeded.
    #[error("semilength {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    /// `is_root` was claimed for a word that is not the maximal pyramid.
    #[error("word is not the maximal pyramid of its size")]
    NotRoot,

    /// The maximal pyramid was passed where a non-root word is required.
    #[error("word is the maximal pyramid; it must be expanded as the root")]
    IsRoot,

    /// The root of the generating tree has no parent.
    #[error("the maximal pyramid has no parent")]
    RootHasNoParent,

    /// A serialized generator snapshot failed to parse or validate.
    #[error("bad generator snapshot: {0}")]
    BadSnapshot(String),
}

pub type Result<T> = std::result::Result<T, Error>;
