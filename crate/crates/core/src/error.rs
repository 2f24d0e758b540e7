use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: non-increasing timestamp {timestamp}")]
    NonIncreasingTimestamp { line: usize, timestamp: i64 },

    #[error("line {line}: price {price} is not positive and finite")]
    InvalidPrice { line: usize, price: f64 },

    #[error("series has {len} points, at least 2 are required")]
    TooShort { len: usize },

    #[error("series share {common} timestamps, at least 2 are required")]
    EmptyIntersection { common: usize },

    #[error("invalid rate: {0}")]
    InvalidRate(String),

    #[error("start index {index} out of range for series of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid rho grid: {0}")]
    InvalidGrid(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("multi-period fraction is undefined with zero successes")]
    ZeroSuccesses,

    #[error("transaction duration must be at least one tick")]
    ZeroDuration,

    #[error("rho {rho} lies outside the bin range [{lo}, {hi}]")]
    OutOfBinRange { rho: f64, lo: f64, hi: f64 },

    #[error("histograms are not comparable: {0}")]
    HistogramMismatch(String),

    #[error("cannot normalize a histogram with no in-range values")]
    EmptyHistogram,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
