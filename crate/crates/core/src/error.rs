use thiserror::Error;

/// Everything that can go wrong while parsing diagrams or evaluating invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("malformed PD tuple `{0}`")]
    MalformedTuple(String),

    #[error("arc label {label} appears {count} time(s), expected exactly 2")]
    ArcMultiplicity { label: i64, count: usize },

    #[error("non-planar incidence data: {0}")]
    NonPlanar(String),

    #[error("inconsistent orientation on the component through arc {0}")]
    InconsistentOrientation(i64),

    #[error("unknown crossing id {0}")]
    UnknownCrossing(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("braid parse error: {0}")]
    BraidParse(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not square ({rows} rows, row of length {cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid unit-circle point `{0}`")]
    BadAngle(String),

    #[error("sign of a pivot could not be certified at {0} bits")]
    Uncertified(u32),

    #[error("Alexander polynomial vanishes identically")]
    DegenerateAlexander,

    #[error("no admissible angle 1/q with q <= {0}")]
    NoAdmissibleAngle(u32),

    #[error("checkerboard colorings disagree: {first} vs {second}")]
    ColoringDisagreement { first: i64, second: i64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, KnotError>;
