use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {input:?}: bad token {token:?} ({reason})")]
    Parse {
        input: String,
        token: String,
        reason: &'static str,
    },

    #[error("letter ids start at 1, got {0}")]
    InvalidLetter(u64),

    #[error("word of length {requested} exceeds the word-size cap of {cap} letters")]
    WordCap { requested: usize, cap: usize },

    #[error("finite directive word is exhausted: Pal has {available} letters but {requested} were requested")]
    DirectiveExhausted { available: usize, requested: usize },

    #[error("maximum factor length {max_len} exceeds word length {len}")]
    MaxLenTooLarge { max_len: usize, len: usize },

    #[error("period of an eventually periodic word must be nonempty")]
    EmptyPeriod,

    #[error("the directive tail must be a single letter, got a period of length {0}; such words are not ultimately periodic")]
    NotSingleLetterTail(usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error(
        "factor sets were computed only up to length {computed}, length {requested} is needed"
    )]
    FactorsNotComputed { computed: usize, requested: usize },

    #[error("{0}")]
    OutOfRange(String),

    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
