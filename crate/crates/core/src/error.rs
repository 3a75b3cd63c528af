use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value {0} is outside [0, 1]")]
    ValueOutOfRange(f64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("symbol index {symbol} is out of range for an alphabet of size {alphabet}")]
    BadSymbol { symbol: usize, alphabet: usize },

    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("alphabets differ: {left} vs {right} symbols")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("relation is not a fuzzy {epsilon}-pre-order")]
    NotEpsFpo { epsilon: f64 },

    #[error("closure exceeded {cap} vectors; the truncated lattice may not be locally finite for this epsilon")]
    ClosureCapExceeded { cap: usize },

    #[error("enumeration needs {needed} items, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cannot generate an automaton: {0}")]
    Infeasible(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
