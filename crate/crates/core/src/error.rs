use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("unsupported group `{0}`")]
    UnsupportedGroup(String),
    #[error("unsupported space `{0}`")]
    UnsupportedSpace(String),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("index {name}={value} outside 1..={max}")]
    IndexOutOfRange {
        name: &'static str,
        value: usize,
        max: usize,
    },
    #[error("row and column index must differ (both {0})")]
    DiagonalIndex(usize),
    #[error("invalid parameter matrix: {0}")]
    InvalidParameter(String),
    #[error("matrix is not in {group} (membership residual {residual:e})")]
    NotInGroup { group: String, residual: f64 },
    #[error("point is off the unit sphere (|x| = {norm})")]
    OffSphere { norm: f64 },
    #[error("function is not invariant: {0}")]
    NotInvariant(String),
    #[error("function is not K-invariant: horizontal tension {horizontal} vs full tension {full}")]
    NotKInvariant { horizontal: String, full: String },
    #[error("directions are g-orthogonal; pullback numerator is {numerator:e}")]
    OrthogonalDirections { numerator: f64 },
    #[error("polynomial is not homogeneous of degree {degree}")]
    NotHomogeneous { degree: u32 },
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
