use thiserror::Error;

/// Everything that ends a run with exit code 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
    #[error("cannot write {path}: {message}")]
    Write { path: String, message: String },
    #[error("malformed domain JSON: {0}")]
    Json(String),
    #[error("CAPGEO_THREADS must be a positive integer, got {0:?}")]
    Threads(String),
    #[error("unknown gallery family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Core(#[from] capgeo_core::Error),
}

impl CliError {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        use capgeo_core::Error as E;
        match self {
            CliError::Usage(_) => "usage",
            CliError::Read { .. } => "read",
            CliError::Write { .. } => "write",
            CliError::Json(_) => "malformed_json",
            CliError::Threads(_) => "bad_environment",
            CliError::UnknownFamily(_) => "unknown_family",
            CliError::Core(e) => match e {
                E::InvalidDomain(_) => "invalid_domain",
                E::InvalidRadius(_) => "invalid_radius",
                E::InvalidTolerance(_) => "invalid_tolerance",
                E::GammaOutOfRange(_) => "gamma_out_of_range",
                E::NotConvex => "not_convex",
                E::InvalidParameters(_) => "invalid_parameters",
                E::NotBracketed { .. } => "not_bracketed",
                E::NeckAtCheegerRadius { .. } => "neck_at_cheeger_radius",
                E::NotASubset => "not_a_subset",
                E::DegenerateSubset => "degenerate_subset",
                E::BadSampleCount(_) => "bad_sample_count",
                E::HoleInDilation { .. } => "hole_in_dilation",
            },
        }
    }
}
