use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid mixture spec: {0}")]
    InvalidSpec(String),

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite value at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("eigendecomposition failed")]
    Eigen,

    #[error("ball rounding stopped after {picked} of {k} centers: no vertices left")]
    RoundingExhausted { picked: usize, k: usize },

    #[error("only {found} distinct locations, need {k}")]
    TooFewLocations { found: usize, k: usize },

    #[error("adaptive quadrature did not reach tolerance (estimated error {0:e})")]
    Quadrature(f64),

    #[error("no Monte Carlo samples landed in the Voronoi cell")]
    EmptyCell,

    #[error("label {label} out of range for k = {k}")]
    LabelOutOfRange { label: usize, k: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{failed} of {total} solves did not converge")]
    NotConverged { failed: usize, total: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable tag, used in the CLI's error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidSpec(_) => "invalid_spec",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::NonFinite { .. } => "non_finite",
            Error::NotSymmetric(_) => "not_symmetric",
            Error::Eigen => "eigen_failure",
            Error::RoundingExhausted { .. } => "rounding_exhausted",
            Error::TooFewLocations { .. } => "too_few_locations",
            Error::Quadrature(_) => "quadrature",
            Error::EmptyCell => "empty_cell",
            Error::LabelOutOfRange { .. } => "label_out_of_range",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::NotConverged { .. } => "not_converged",
            Error::Io(_) => "io",
            Error::Csv(_) => "csv",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
