use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension {0} is not supported (maximum is {max})", max = crate::geom::MAX_DIM)]
    UnsupportedDimension(usize),

    #[error("region is unbounded: facet normals do not positively span the ambient space")]
    Unbounded,

    #[error("the Minkowski sum of the Newton polytopes has dimension {found}, expected {expected}")]
    NotFullDimensional { expected: usize, found: usize },

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("support of polynomial {index} escapes its declared support")]
    SupportEscape { index: usize },

    #[error("target polynomial has terms outside the shifted Minkowski sum")]
    TargetSupportEscape,

    #[error("shift coordinate {0} is outside the open interval (-1, 1)")]
    DeltaOutOfRange(String),

    #[error("exponent vector does not belong to the stated degree")]
    NotOfDegree,

    #[error("no value assigned to variable {0}")]
    MissingVariable(String),

    #[error("assigned coefficient for {0} is zero")]
    ZeroCoefficient(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("expected {expected} polynomials, found {found}")]
    WrongCount { expected: usize, found: usize },

    #[error("complex is not exact at level {level} (rank {rank}, required {required})")]
    ExactnessFailure { level: usize, rank: usize, required: usize },

    #[error("division failure: {0}")]
    DivisionFailure(String),

    #[error("degree of the resultant in group {group} is {found}, mixed volume predicts {expected}")]
    DegreeMismatch { group: usize, expected: u64, found: u64 },
}
