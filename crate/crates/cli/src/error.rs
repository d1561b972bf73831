use ctrlab_core::cycle::CycleError;
use ctrlab_core::perfect::GraphError;
use ctrlab_core::schubert::SchubertError;
use ctrlab_core::{LatticeError, PosetError};

/// Everything that can stop a run. [`CliError::exit_code`] maps input
/// problems to 2 and internal failures to 1.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    /// Malformed JSON or a schema violation. serde_json reports line and
    /// column, and the field for unknown or missing keys.
    #[error("{context}: {source}")]
    Json { context: String, source: serde_json::Error },
    #[error("{context}: invalid poset: {source}")]
    Poset { context: String, source: PosetError },
    #[error("{context}: invalid graph: {source}")]
    Graph { context: String, source: GraphError },
    #[error("{context}: invalid Schubert index: {source}")]
    Schubert { context: String, source: SchubertError },
    #[error("{0}")]
    Usage(String),
    /// A report handed to `verify` is not one this tool writes.
    #[error("malformed report: {0}")]
    Report(String),
    #[error("cycle: {0}")]
    Cycle(CycleError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. }
            | CliError::Json { .. }
            | CliError::Poset { .. }
            | CliError::Graph { .. }
            | CliError::Schubert { .. }
            | CliError::Usage(_)
            | CliError::Report(_) => 2,
            CliError::Cycle(CycleError::TooShort(_)) => 2,
            CliError::Cycle(_) | CliError::Lattice(_) => 1,
        }
    }
}

impl From<CycleError> for CliError {
    fn from(e: CycleError) -> Self {
        CliError::Cycle(e)
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
