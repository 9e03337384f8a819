//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by lexing, corpus ingestion, metrics, and adapter math.
#[derive(Debug, Error)]
pub enum Error {
    /// A string, character, or comment token reached end of input unclosed.
    #[error("unterminated {what} starting at line {line}, column {column}")]
    UnterminatedToken {
        what: &'static str,
        line: usize,
        column: usize,
    },

    /// Source could not be analyzed (lex error or unbalanced braces).
    #[error("unparseable source{}", .file.as_ref().map(|f| format!(" in {f}")).unwrap_or_default())]
    UnparseableSource { file: Option<String> },

    /// Two vectors that must have equal lengths do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// KL divergence is undefined: q has a zero where p has mass.
    #[error("KL divergence undefined: q[{index}] = 0 while p[{index}] > 0")]
    KlUndefined { index: usize },

    /// A probability vector failed validation.
    #[error("invalid distribution: {reason}")]
    InvalidDistribution { reason: String },

    /// A corpus line could not be decoded.
    #[error("corpus line {line}: {reason}")]
    CorpusParse { line: usize, reason: String },

    /// Lookup of a user that is not in the corpus.
    #[error("unknown user: {0}")]
    UnknownUser(String),

    /// Every record for the user failed style analysis.
    #[error("user {0} has no parseable records")]
    NoParseableRecords(String),

    /// An operation that needs input got none.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// Split ratios or sizes are unusable.
    #[error("invalid split: {0}")]
    InvalidSplit(String),

    /// Matrix/vector dimensions disagree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An attribute was requested that the catalog does not define.
    #[error("attribute missing from catalog: {0}")]
    MissingAttribute(String),

    /// A residual-prompt render was asked for an unsupported attribute set.
    #[error("{0}")]
    InvalidResidual(String),

    /// A target token index is outside the vocabulary.
    #[error("target index {index} out of range for vocabulary size {vocab}")]
    TargetOutOfRange { index: usize, vocab: usize },

    /// A feature vector had zero norm where cosine similarity is needed.
    #[error("zero-norm feature vector for user index {0}")]
    ZeroNormFeature(usize),

    /// A loss or intermediate value was NaN or infinite.
    #[error("non-finite value encountered: {0}")]
    NonFinite(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
