use thiserror::Error;

/// Errors produced by parsing, construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("dictionary contains no words")]
    EmptyDictionary,

    #[error("line {line}: the empty word is not allowed in a dictionary")]
    EmptyWord { line: usize },

    #[error("symbol '{0}' is not part of the alphabet")]
    UnknownGlyph(char),

    #[error("symbol index {symbol} is out of range for an alphabet of size {size}")]
    SymbolOutOfRange { symbol: usize, size: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("automaton accepts the empty word")]
    AcceptsEmptyWord,

    #[error("automaton returns to its initial state on a non-empty word")]
    ReturningInitial,

    #[error("subset search stored {reached} subsets, exceeding the cap of {cap}")]
    CapExceeded { reached: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("automaton accepts an infinite language")]
    InfiniteLanguage,

    #[error("rewriting system is immortal from the given subset")]
    ImmortalFrom,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
