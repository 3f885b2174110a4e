use thiserror::Error;

/// Errors raised by automaton construction, solving and the search pipelines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("symbol {symbol} is outside the alphabet of size {alphabet_size}")]
    SymbolOutOfAlphabet { symbol: u8, alphabet_size: u8 },

    #[error("unsupported alphabet size {0} (expected 2 or 3)")]
    UnsupportedAlphabet(u8),

    #[error("state {state} is out of range for an automaton with {state_count} states")]
    StateOutOfRange { state: usize, state_count: usize },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: u8, right: u8 },

    #[error("state set belongs to a different automaton")]
    ForeignStateSet,

    #[error("malformed automaton text (line {line}): {reason}")]
    Parse { line: usize, reason: String },

    #[error("invalid word {0:?}")]
    InvalidWord(String),

    #[error("sep is undefined for equal words")]
    EqualWords,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("determinization exceeded the budget of {limit} states")]
    DeterminizationBudget { limit: usize },

    #[error("search budget exhausted in {stage}")]
    SearchBudget { stage: String },

    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o: {0}")]
    Io(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn in_stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
