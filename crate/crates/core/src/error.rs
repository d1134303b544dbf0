use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet size {0}: need q >= 2")]
    InvalidAlphabet(u32),

    #[error("invalid radius {radius} for length {len}")]
    InvalidRadius { len: u32, radius: u32 },

    #[error("invalid query n={n} d={d}: need 1 <= d <= n")]
    InvalidQuery { n: u32, d: u32 },

    #[error("logarithm of zero is undefined")]
    UndefinedLog,

    #[error("invalid range {lo}..{hi}")]
    InvalidRange { lo: u32, hi: u32 },

    #[error("bound not applicable: {0}")]
    NotApplicable(&'static str),

    #[error("words are incompatible (length or alphabet mismatch)")]
    IncompatibleWords,

    #[error("minimum distance needs at least two words")]
    UndefinedDistance,

    #[error("duplicate word in code")]
    DuplicateWord,

    #[error("symbol {symbol} out of range for q={q}")]
    SymbolOutOfRange { symbol: u8, q: u8 },

    #[error("prefixes of length {k} do not cover all q^k messages exactly once")]
    NotSystematic { k: usize },

    #[error("enumeration of {count} codes exceeds budget {budget}")]
    EnumerationTooLarge { count: String, budget: u64 },

    #[error("unsupported alphabet q={0}: the oracle needs a prime q")]
    UnsupportedAlphabet(u32),

    #[error("precondition violated: {0}")]
    PreconditionViolation(&'static str),

    #[error("malformed table data: {0}")]
    MalformedData(String),
}
