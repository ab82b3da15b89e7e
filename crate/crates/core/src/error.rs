use thiserror::Error;

/// Errors produced by the spectral engines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A tabulated potential was evaluated outside its sample range.
    #[error("position {position} outside tabulated range [{lo}, {hi}]")]
    OutOfRange { position: f64, lo: f64, hi: f64 },

    /// The operation does not apply to this problem.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Node counts never straddled the requested level within the search window.
    #[error("no bracket for level n_r = {n_r} in energy window [{lo}, {hi}]")]
    NoBracket { n_r: usize, lo: f64, hi: f64 },

    #[error("no convergence after {iterations} iterations: {context}")]
    NonConvergence { iterations: usize, context: String },

    /// The classical turning point lies at or beyond the end of the grid.
    #[error("grid too small: turning point {turning_point} beyond usable r_max {r_max}")]
    GridTooSmall { turning_point: f64, r_max: f64 },

    /// Grid spacing too coarse for the feature it must resolve.
    #[error("grid resolution: spacing {spacing} exceeds limit {limit}")]
    GridResolution { spacing: f64, limit: f64 },

    /// The classically allowed region is not a single interval bounded by two turning points.
    #[error("unsupported topology: {0}")]
    Topology(String),

    /// Gamma evaluated at one of its poles.
    #[error("gamma function pole at z = {0}")]
    GammaPole(f64),

    #[error("i/o: {0}")]
    Io(String),

    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
