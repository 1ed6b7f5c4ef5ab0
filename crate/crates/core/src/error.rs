use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("columns span a proper sublattice of Z^3 (gcd of maximal minors is {0})")]
    NotFullLattice(String),
    #[error("no grading is positive on every column")]
    NotPointed,
    #[error("column {0} appears more than once")]
    DuplicateColumn(usize),
    #[error("expected 3 rows, got {0}")]
    WrongShape(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("polytope has dimension {0}, volume needs dimension 3")]
    DimensionTooLow(usize),
    #[error("empty point set")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EhrhartError {
    #[error("h* entry {index} is negative ({value})")]
    NegativeHStar { index: usize, value: String },
    #[error("interpolated polynomial predicts {predicted} points in 4P but {counted} were counted")]
    InterpolationMismatch { predicted: String, counted: u64 },
    #[error("degree at most one but no normal form matched")]
    ClassificationFailed,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankError {
    #[error("ranking set is not simple at this parameter")]
    NotSimple,
    #[error("ranking set does not have the two-face shape")]
    NotTwoFace,
}
