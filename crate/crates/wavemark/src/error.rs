use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported plane size {0}x{1}: sides must be even and at least 16")]
    BadPlaneSize(usize, usize),

    #[error("message capacity exceeded: {bits} bits leave {coeffs_per_bit} coefficients per bit (minimum 64)")]
    Capacity { bits: usize, coeffs_per_bit: usize },

    #[error("bad message: {0}")]
    BadMessage(String),

    #[error("key must be 16 hex digits, got {0:?}")]
    BadKey(String),

    #[error("image error: {0}")]
    Image(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("invalid argument: {0}")]
    InvalidArg(String),
}

impl Error {
    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }
}
