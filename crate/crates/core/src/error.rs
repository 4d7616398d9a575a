use thiserror::Error;

/// Errors raised by graph construction, parsing and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter or input violated a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Text input (edge lists, CNF, spec strings) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// The distance table contains duplicate rows, so no column set can resolve it.
    #[error("table is not resolvable: rows {0} and {1} are identical")]
    Unresolvable(usize, usize),

    /// Observed arrival times do not match any candidate source.
    #[error("no vertex is consistent with the observations")]
    InconsistentObservations,

    /// Several sources explain the observations equally well.
    #[error("observers are not doubly resolving: vertices {0} and {1} both match")]
    AmbiguousSource(usize, usize),

    /// The allocation cannot push the failure bound under the threshold.
    #[error("threshold {threshold} unreachable; best achievable bound is {floor}")]
    ThresholdUnreachable { threshold: f64, floor: f64 },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
