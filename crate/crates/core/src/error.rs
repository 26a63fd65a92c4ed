//! Error types, one enum per subsystem, plus the crate-level [`Error`]
//! that CLI commands map onto exit codes.

use std::path::PathBuf;

use thiserror::Error;

/// Dataset ingestion and manifest errors.
#[derive(Debug, Error)]
pub enum CsiError {
    #[error("missing file: {path}")]
    MissingFile { path: PathBuf },
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("manifest parse error: {0}")]
    ManifestParse(#[from] serde_json::Error),
    #[error("schema mismatch in record {record_id}: {detail}")]
    SchemaMismatch { record_id: String, detail: String },
    #[error("corrupted record {record_id}: {detail}")]
    CorruptedRecord { record_id: String, detail: String },
    #[error("record {record_id} violates invariant: {detail}")]
    InvalidRecord { record_id: String, detail: String },
    #[error("unknown factor {0:?} (expected user/location/orientation/environment)")]
    UnknownFactor(String),
    #[error("held-out value {value:?} absent from factor {factor:?}")]
    HeldOutAbsent { factor: String, value: String },
    #[error("empty source split: every record has {factor} = {value}")]
    EmptySource { factor: String, value: String },
    #[error("no records in manifest")]
    EmptyManifest,
}

/// Signal-processing errors.
#[derive(Debug, Error)]
pub enum DspError {
    #[error("degenerate antenna {antenna}: subcarrier {subcarrier} has zero mean amplitude")]
    DegenerateAntenna { antenna: usize, subcarrier: usize },
    #[error("antenna index {0} out of range (A = {1})")]
    AntennaOutOfRange(usize, usize),
    #[error("antenna pair indices must be distinct, got ({0}, {1})")]
    PairNotDistinct(usize, usize),
    #[error("denominator underflow at subcarrier {subcarrier}, sample {sample}: |H| = {magnitude:.3e} < {threshold:.3e}")]
    DenominatorUnderflow {
        subcarrier: usize,
        sample: usize,
        magnitude: f64,
        threshold: f64,
    },
    #[error("invalid cutoff {cutoff_hz} Hz for sample rate {sample_rate_hz} Hz")]
    InvalidCutoff { cutoff_hz: f64, sample_rate_hz: f64 },
    #[error("record too short: {samples} samples < window {window}")]
    RecordTooShort { samples: usize, window: usize },
    #[error("no views to render")]
    NoViews,
    #[error("tile grid mismatch: {0}")]
    TileGrid(String),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("cache error: {0}")]
    Cache(String),
}

/// Model-construction and forward/backward errors.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    DimMismatch {
        expected: usize,
        got: usize,
        context: &'static str,
    },
    #[error("label {label} out of range for {classes} classes")]
    LabelOutOfRange { label: usize, classes: usize },
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error("unknown backbone profile {0:?}")]
    UnknownBackbone(String),
}

/// Training-loop errors.
#[derive(Debug, Error)]
pub enum TrainError {
    #[error("empty dataset")]
    EmptyDataset,
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("dataset label sets differ between source and target")]
    LabelSetMismatch,
    #[error("baseline {0:?} requires a physical factor; none declared")]
    MissingPhysicalFactor(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Evaluation and diagnostics errors.
#[derive(Debug, Error)]
pub enum EvalError {
    #[error("label-set mismatch between model and target dataset")]
    LabelSetMismatch,
    #[error("unknown factor {0:?}")]
    UnknownFactor(String),
    #[error("entropy undefined for all-zero counts")]
    AllZeroCounts,
    #[error("empty dataset")]
    EmptyDataset,
}

/// Synthetic-generator errors.
#[derive(Debug, Error)]
pub enum SynthError {
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error("unknown profile {0:?} (expected mixture3, semantic-conflict or manifold-gap)")]
    UnknownProfile(String),
}

/// Crate-level error; CLI maps user-input errors to exit code 2 and
/// internal failures to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Csi(#[from] CsiError),
    #[error(transparent)]
    Dsp(#[from] DspError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Train(#[from] TrainError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Synth(#[from] SynthError),
    #[error("{0}")]
    User(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True when the error is the caller's fault (bad paths, bad config,
    /// malformed input) rather than an internal failure.
    pub fn is_user_error(&self) -> bool {
        matches!(
            self,
            Error::Csi(_)
                | Error::Dsp(_)
                | Error::Synth(_)
                | Error::Eval(_)
                | Error::User(_)
                | Error::Io(_)
                | Error::Train(TrainError::InvalidConfig(_))
                | Error::Train(TrainError::EmptyDataset)
                | Error::Train(TrainError::LabelSetMismatch)
                | Error::Train(TrainError::MissingPhysicalFactor(_))
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
