//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised while building distributions, mechanisms, or bounds.
#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),

    #[error("unknown label {label:?} in {context}")]
    UnknownLabel { label: String, context: String },

    #[error("matrix shape {rows}x{cols} does not match alphabets {expected_rows}x{expected_cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("negative probability entry {0}")]
    NegativeEntry(f64),

    #[error("probabilities sum to {sum}, more than 1e-12 away from {target}")]
    NotNormalized { sum: f64, target: f64 },

    #[error("operands are defined over different alphabets ({context})")]
    AlphabetMismatch { context: String },

    #[error("sample set is empty")]
    EmptySampleSet,

    #[error("sample pair ({s}, {x}) at index {index} uses a label outside the declared alphabets")]
    UnknownSamplePair { s: String, x: String, index: usize },

    #[error("csv parse error at line {line}: {message}")]
    CsvParse { line: u64, message: String },

    #[error("lambda must be at least 1, got {0}")]
    LambdaBelowOne(f64),

    #[error("{name} must lie in ({low}, {high}], got {value}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        low: f64,
        high: f64,
    },

    #[error("generator {name:?} failed validation: {message}")]
    InvalidGenerator { name: String, message: String },

    #[error("unknown metric {name:?}; valid metrics are tv, chi2, hellinger:<alpha>, pc")]
    UnknownMetric { name: String },

    #[error("divergence is infinite: p({index}) = {p} > 0 while q({index}) = 0 and the generator grows super-linearly")]
    AbsoluteContinuity { index: usize, p: f64 },

    #[error("ball center violates the family constraint: {message}")]
    CenterOutsideFamily { message: String },

    #[error("bound requires m_X <= m_S, got m_X = {m_x} > m_S = {m_s}")]
    MarginalOrder { m_s: f64, m_x: f64 },

    #[error("h_plus = {h_plus} is smaller than h_minus = {h_minus}; the trade-off curve evaluations are inconsistent")]
    InconsistentCurve { h_plus: f64, h_minus: f64 },

    #[error("epsilon {eps} outside the closed-form validity range [{low}, {high}]")]
    EpsOutsideRange { eps: f64, low: f64, high: f64 },

    #[error("degenerate channel: p = q = {0} leaves the trade-off slope undefined")]
    DegenerateChannel(f64),

    #[error("input alphabet size {size} exceeds the exhaustive grid limit {max}; use the local solver instead")]
    AlphabetTooLarge { size: usize, max: usize },

    #[error("radius {r} is inadmissible; the largest admissible radius for this instance is {r_max}")]
    RadiusInadmissible { r: f64, r_max: f64 },

    #[error("epsilon grid must be sorted ascending (entry {index}: {value} < {previous})")]
    UnsortedEpsGrid {
        index: usize,
        value: f64,
        previous: f64,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
