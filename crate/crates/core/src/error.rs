use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("index {index} out of range for ambient size {ambient}")]
    IndexOutOfRange { index: usize, ambient: usize },
    #[error("indices must be strictly increasing")]
    NotStrictlyIncreasing,
    #[error("rank {rank} out of range: C({ambient},{size}) = {count}")]
    RankOutOfRange {
        rank: usize,
        ambient: usize,
        size: usize,
        count: usize,
    },
    #[error("truncation window of size {window} is too small for order n = {n}")]
    WindowTooSmall { window: usize, n: usize },
    #[error("coefficient index {k} outside alias-safe range |k| <= {max} for {samples} samples")]
    AliasingRange { k: i64, max: i64, samples: usize },
    #[error("sample counts differ: {0} vs {1}")]
    SampleCountMismatch(usize, usize),
    #[error("sample count {0} must be a power of two and at least 2")]
    BadSampleCount(usize),
    #[error("instance too large for brute-force enumeration: n = {n}, M = {m}")]
    InstanceTooLarge { n: usize, m: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
