use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (max |M - M^dagger| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("trace is {trace}, expected 1")]
    TraceNotUnit { trace: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("dimension {0} is not a power of two")]
    NotQubitRegister(usize),

    #[error("qubit label {0} is out of range")]
    LabelOutOfRange(usize),

    #[error("qubit label {0} listed more than once")]
    DuplicateLabel(usize),

    #[error("at least one qubit must be kept")]
    EmptyKeep,

    #[error("{name} = {value} is outside [-1, 1]")]
    CorrelationOutOfRange { name: &'static str, value: f64 },

    #[error("unphysical correlation triple: {inequality} is violated")]
    Unphysical { inequality: &'static str },

    #[error("matrix is not of X form (entry ({row},{col}) = {magnitude:e})")]
    NotXForm {
        row: usize,
        col: usize,
        magnitude: f64,
    },

    #[error("Rindler angle r = {0} is outside [0, pi/4]")]
    AngleOutOfRange(f64),

    #[error("acceleration ratio {0} must be non-negative")]
    NegativeAccelRatio(f64),

    #[error("probabilities must be non-negative and sum to 1 (sum = {sum})")]
    InvalidProbabilities { sum: f64 },

    #[error("invalid sweep config: {0}")]
    InvalidConfig(String),

    #[error("closed form and oracle disagree by {discrepancy:e} on {coefficient} ({region}, r_a = {ra}, r_b = {rb})")]
    OracleMismatch {
        region: &'static str,
        ra: f64,
        rb: f64,
        coefficient: &'static str,
        discrepancy: f64,
    },

    #[error("unknown region token {0:?} (expected I-I, II-II, I-II or II-I)")]
    UnknownRegion(String),
}
