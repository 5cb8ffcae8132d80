use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("Jacobi identity fails for basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },

    /// The lower central series stalls at a nonzero subspace.
    #[error(
        "algebra is not nilpotent: lower central series stabilizes at dimension {stalled_dim}"
    )]
    NotNilpotent { stalled_dim: usize },

    /// `m^index_bound` was not the zero matrix.
    #[error("matrix is not nilpotent of index at most {index_bound}")]
    MatrixNotNilpotent { index_bound: usize },

    #[error(
        "polynomial is not a linear functional (degree {degree:?}, homogeneous: {homogeneous})"
    )]
    NotLinearFunctional {
        degree: Option<u32>,
        homogeneous: bool,
    },

    #[error("polynomial of degree {degree} exceeds the cap {cap}")]
    DegreeExceeded { degree: u32, cap: u32 },

    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),

    #[error("subspace is not invariant: {0}")]
    NotInvariant(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension {dim} exceeds the configured cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
}

impl Error {
    /// Short machine-readable name used in CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::JacobiViolation { .. } => "JacobiViolation",
            Error::NotNilpotent { .. } => "NotNilpotent",
            Error::MatrixNotNilpotent { .. } => "MatrixNotNilpotent",
            Error::NotLinearFunctional { .. } => "NotLinearFunctional",
            Error::DegreeExceeded { .. } => "DegreeExceeded",
            Error::InvalidStructure(_) => "InvalidStructure",
            Error::NotInvariant(_) => "NotInvariant",
            Error::BadParameter(_) => "BadParameter",
            Error::Parse(_) => "ParseError",
            Error::DimensionCap { .. } => "DimensionCap",
        }
    }

    /// Offending indices, when the error carries any.
    pub fn indices(&self) -> Vec<usize> {
        match self {
            Error::JacobiViolation { i, j, k } => vec![*i, *j, *k],
            Error::DimensionMismatch { expected, found } => vec![*expected, *found],
            _ => Vec::new(),
        }
    }
}
