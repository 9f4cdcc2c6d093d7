use thiserror::Error;

/// Errors raised while parsing or constructing a pattern.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("empty pattern")]
    Empty,
    #[error("empty block at position {0}")]
    EmptyBlock(usize),
    #[error("rank 0 is not a valid letter")]
    ZeroRank,
    #[error("unexpected character {ch:?} at offset {offset}")]
    UnexpectedChar { ch: char, offset: usize },
    #[error("unterminated parenthesised rank")]
    UnterminatedRank,
    #[error("class {class} uses ranks {ranks:?}, which are not contiguous from {expected_start}")]
    NonContiguousRanks {
        class: u32,
        ranks: Vec<u32>,
        expected_start: u32,
    },
    #[error("order relation contains a cycle through {0}")]
    Cycle(String),
    #[error("order spec mentions {0}, which does not occur in the pattern")]
    UnknownSymbol(String),
    #[error("malformed order spec: {0}")]
    BadOrderSpec(String),
    #[error("operation requires a pattern without hyphens, got {0}")]
    HyphenatedPattern(String),
}

/// Errors raised while parsing a word.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter {letter} is outside the alphabet [1..{k}]")]
    LetterOutOfRange { letter: u32, k: u32 },
    #[error("cannot parse word: {0}")]
    Parse(String),
}

/// Errors raised by the brute-force oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration budget of {cap} word-steps exceeded (k={k}, n={n})")]
    BudgetExceeded { cap: u64, k: u32, n: usize },
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// Errors raised by truncated series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("cannot invert a series with zero constant term")]
    ZeroConstantTerm,
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("coefficient of x^{index} is {value}, expected a nonnegative integer")]
    NotIntegral { index: usize, value: String },
    #[error("series is not divisible by x^{0}")]
    NotDivisible(usize),
}

/// Errors raised by the generating-function engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("unknown registry pattern {0:?}")]
    UnknownPattern(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
