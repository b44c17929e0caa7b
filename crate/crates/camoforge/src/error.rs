//! Crate-wide error type and result alias.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("validation: {0}")]
    Validation(String),

    #[error("empty object: the object footprint contains no pixels")]
    EmptyObject,

    #[error("shape mismatch: expected {expected}, got {actual}")]
    ShapeMismatch { expected: String, actual: String },

    #[error("singular projection matrix (|det| = {det:.3e})")]
    SingularMatrix { det: f64 },

    #[error("degenerate projection: pitch {pitch_deg} deg is edge-on")]
    DegeneratePitch { pitch_deg: f64 },

    #[error("gradients unavailable: {0}")]
    GradientsUnavailable(String),

    #[error("non-finite loss at step {step}: {context}")]
    NonFiniteLoss { step: usize, context: String },

    #[error("dataset: {0}")]
    Dataset(String),

    #[error("checksum mismatch for {path}: manifest {expected}, file {actual}")]
    ChecksumMismatch {
        path: PathBuf,
        expected: String,
        actual: String,
    },

    #[error("config: {0}")]
    Config(String),

    #[error("missing upstream artifact: {0}")]
    MissingArtifact(PathBuf),

    #[error("training budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("png decode: {0}")]
    PngDecode(#[from] png::DecodingError),

    #[error("png encode: {0}")]
    PngEncode(#[from] png::EncodingError),

    #[error("image: {0}")]
    Image(#[from] image::ImageError),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code contract used by the CLI: 2 config, 3 IO, 4 missing
    /// dependency, 5 numeric failure, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Io(_) | Error::PngDecode(_) | Error::PngEncode(_) | Error::Image(_) => 3,
            Error::MissingArtifact(_) => 4,
            Error::NonFiniteLoss { .. } => 5,
            _ => 1,
        }
    }
}
