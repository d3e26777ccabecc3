use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },

    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),

    #[error("symbol index {0} is out of range for the alphabet")]
    SymbolOutOfRange(usize),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The operand does not have the shape a construction requires.
    #[error("operand shape not supported by this construction: {0}")]
    Shape(String),

    #[error("integer overflow evaluating {0}")]
    Overflow(String),

    #[error("search space of {pairs} pairs exceeds the budget of {budget}")]
    BudgetExceeded { pairs: u128, budget: u128 },

    #[error("{path}: {message}")]
    Document { path: String, message: String },
}

impl Error {
    pub(crate) fn doc(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Document {
            path: path.into(),
            message: message.into(),
        }
    }
}
