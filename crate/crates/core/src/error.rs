use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report. The variant name doubles as the
/// stable error identifier printed by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionError { expected: usize, found: usize },

    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: String },

    #[error("image of x{index} is not a unit of the Laurent ring")]
    NotAUnit { index: usize },

    #[error("operation undefined on the zero element")]
    ZeroElement,

    #[error("element is not homogeneous (support has {support_len} points)")]
    NotHomogeneous { support_len: usize },

    #[error("operation unsupported in dimension {n}")]
    UnsupportedDimension { n: usize },

    #[error("image of H{index} does not lie in the Cartan subalgebra")]
    NotCartanPreserving { index: usize },

    #[error("images of the partial derivations are inconsistent: {reason}")]
    NotDiagonalizable { reason: String },

    #[error("automorphism does not lift: {reason}")]
    NotLiftable { reason: String },

    #[error("lift is not unique ({free} free parameters)")]
    UniquenessViolation { free: usize },

    #[error("subspace is not contained in the centre")]
    NotCentral,

    #[error("map is not a Lie algebra automorphism: {reason}")]
    NotAutomorphism { reason: String },

    #[error("invalid Lie algebra: {reason}")]
    InvalidAlgebra { reason: String },

    #[error("window is too small: {reason}")]
    WindowTooSmall { reason: String },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    /// Stable identifier of the error kind.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionError { .. } => "DimensionError",
            Error::NotUnimodular { .. } => "NotUnimodular",
            Error::NotAUnit { .. } => "NotAUnit",
            Error::ZeroElement => "ZeroElement",
            Error::NotHomogeneous { .. } => "NotHomogeneous",
            Error::UnsupportedDimension { .. } => "UnsupportedDimension",
            Error::NotCartanPreserving { .. } => "NotCartanPreserving",
            Error::NotDiagonalizable { .. } => "NotDiagonalizable",
            Error::NotLiftable { .. } => "NotLiftable",
            Error::UniquenessViolation { .. } => "UniquenessViolation",
            Error::NotCentral => "NotCentral",
            Error::NotAutomorphism { .. } => "NotAutomorphism",
            Error::InvalidAlgebra { .. } => "InvalidAlgebra",
            Error::WindowTooSmall { .. } => "WindowTooSmall",
            Error::Parse { .. } => "ParseError",
        }
    }

    pub(crate) fn dim(expected: usize, found: usize) -> Self {
        Error::DimensionError { expected, found }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::dim(expected, found))
    }
}
