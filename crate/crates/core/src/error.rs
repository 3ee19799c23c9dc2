use thiserror::Error;

/// Errors surfaced by the measure calculus.
#[derive(Debug, Error)]
pub enum MeasureError {
    #[error("pairing is not integrable within the configured tail bound: {0}")]
    NonIntegrable(String),

    #[error("no transform rule for component: {0}")]
    NotTransformableInModel(String),

    #[error("tail truncation could not be certified: {0}")]
    TailBoundFailure(String),

    #[error("kernel support [-1/{n}, 1/{n}] is not contained in [{lo}, {hi}]")]
    SupportViolation { n: u32, lo: f64, hi: f64 },

    #[error("no tent minorant found for K = [{lo}, {hi}] up to half-width {max_l}")]
    WindowConstructionFailure { lo: f64, hi: f64, max_l: f64 },

    #[error("local mass of |mu|(t+K) diverges: {0}")]
    UnboundedLocalMass(String),

    #[error("verdicts violate a proven implication: {0}")]
    InconsistencyDetected(String),

    #[error("positive-definiteness necessary condition violated: {0}")]
    PdCheckFailure(String),

    #[error("unknown example id: {0}")]
    UnknownExample(String),

    #[error("descriptor field {field}: {message}")]
    Descriptor { field: String, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, MeasureError>;
