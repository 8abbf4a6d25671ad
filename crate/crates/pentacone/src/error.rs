use thiserror::Error;

/// Errors raised by the geometric constructions and solvers.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("coincident points: the join is undefined")]
    CoincidentPoints,
    #[error("coincident lines: the meet is undefined")]
    CoincidentLines,
    #[error("collinear points: no unique plane")]
    CollinearPoints,
    #[error("duplicate points in input")]
    DuplicatePoints,
    #[error("indeterminate pencil: the fifth point lies on both degenerate members")]
    IndeterminatePencil,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("degenerate pair choice: multiplier system rank < 3 or plane pairs dependent")]
    DegenerateChoice,
    #[error("a defining vertex triple is collinear")]
    CoplanarTriple,
    #[error("rank-deficient multiplier system")]
    RankDeficient,
    #[error("invalid displacement: norm residual {norm}, Study residual {study}")]
    InvalidDisplacement { norm: f64, study: f64 },
    #[error("degenerate source: points collinear or not on z=0")]
    DegenerateSource,
    #[error("bad pentagon: {0}")]
    BadPentagon(String),
    #[error("point {index} is off the cone (residual {residual:.3e})")]
    PointsOffCone { index: usize, residual: f64 },
    #[error("degenerate triple: translation system rank < 2")]
    DegenerateTriple,
    #[error("zero translation: the cones coincide")]
    ZeroTranslation,
}

pub type Result<T> = std::result::Result<T, Error>;
