use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("sequence must contain at least one element")]
    EmptySequence,

    #[error("sequence length {0} exceeds the supported maximum of {max}", max = crate::MAX_LEN)]
    TooLong(usize),

    #[error("element {value} at index {index} is not +1 or -1")]
    InvalidElement { index: usize, value: i64 },

    #[error("invalid character {ch:?} at column {column} (expected '+' or '-')")]
    InvalidCharacter { column: usize, ch: char },

    #[error("invalid sign {0:?} (expected +1, -1, + or -)")]
    InvalidSign(String),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("shift {tau} out of range for length {len}")]
    ShiftOutOfRange { tau: i64, len: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("input is not a Golay complementary pair (nonzero autocorrelation sum at shift {0})")]
    NotGolay(usize),

    #[error("unknown kernel {0:?} (expected K2, K10 or K26)")]
    UnknownKernel(String),

    #[error("malformed recipe {0:?}")]
    MalformedRecipe(String),

    #[error("pair does not match the recipe {0}")]
    RecipeMismatch(String),

    #[error("insertion index {r} is not admissible for length {len}")]
    InadmissibleInsertion { r: usize, len: usize },

    #[error("unsupported construction: {reason}; nearest supported: {nearest}")]
    Unsupported { reason: String, nearest: String },

    #[error("pair file: {0}")]
    PairFormat(String),

    #[error("length {0} must be odd")]
    EvenLength(usize),

    #[error("length {n} is outside the exhaustive search range 3..={cap}")]
    SearchCap { n: usize, cap: usize },
}
