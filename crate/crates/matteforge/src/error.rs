use thiserror::Error;

/// Errors produced by matteforge operations.
#[derive(Error, Debug)]
#[non_exhaustive]
pub enum Error {
    /// Two planes that must share dimensions do not.
    #[error("shape mismatch: expected {expected_h}x{expected_w}, got {actual_h}x{actual_w}")]
    ShapeMismatch {
        expected_h: usize,
        expected_w: usize,
        actual_h: usize,
        actual_w: usize,
    },

    /// A parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A pixel position lies outside the grid.
    #[error("position ({row}, {col}) out of bounds for {height}x{width} grid")]
    OutOfBounds {
        row: usize,
        col: usize,
        height: usize,
        width: usize,
    },

    /// An operation that needs a nonempty pixel region got an empty one.
    #[error("empty region: {0}")]
    EmptyRegion(&'static str),

    /// The direct solver hit a (numerically) singular system.
    #[error("rank-deficient system: {0}")]
    RankDeficient(String),

    /// Generic I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// PNG decode/encode failure.
    #[error("image error: {0}")]
    Image(#[from] image::ImageError),

    /// A file referenced by a manifest or CLI flag is unusable.
    #[error("unsupported input {path}: {reason}")]
    UnsupportedInput { path: String, reason: String },

    /// Manifest parse / validation failure.
    #[error("manifest error: {0}")]
    Manifest(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(expected: (usize, usize), actual: (usize, usize)) -> Self {
        Error::ShapeMismatch {
            expected_h: expected.0,
            expected_w: expected.1,
            actual_h: actual.0,
            actual_w: actual.1,
        }
    }

    /// True for failures of input validation rather than of the environment.
    /// The CLI maps these to exit code 1 and everything I/O-ish to exit 2.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            Error::Io(_) | Error::Image(_) | Error::UnsupportedInput { .. }
        )
    }
}
