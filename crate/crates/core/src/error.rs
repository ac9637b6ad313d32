use thiserror::Error;

/// Everything that can go wrong in `fano-core`.
///
/// Each variant has a stable machine-readable [`code`](FanoError::code), used by
/// the CLI's JSON error objects.
#[derive(Debug, Error)]
pub enum FanoError {
    #[error("the zero vector has no primitive index")]
    ZeroPoint,
    #[error("vertex ({x}, {y}) is not primitive")]
    NotPrimitive { x: i64, y: i64 },
    #[error("({ux}, {uy}) and ({vx}, {vy}) are collinear with the origin")]
    Collinear { ux: i64, uy: i64, vx: i64, vy: i64 },
    #[error("the origin is not an interior point")]
    OriginNotInterior,
    #[error("convex hull has {0} vertices, at least 3 are required")]
    TooFewVertices(usize),
    #[error("point ({x}, {y}) appears more than once")]
    DuplicatePoint { x: i64, y: i64 },
    #[error("matrix has determinant {0}, expected +1 or -1")]
    NotUnimodular(i64),
    #[error("invalid triangle parameters a={a}, b={b}: {reason}")]
    InvalidTriangleParams { a: i64, b: i64, reason: String },
    #[error("the smooth type 1/1(1,1) has no exceptional curves")]
    SmoothSingularity,
    #[error("invalid singularity type 1/{n}(1,{k})")]
    InvalidSingularity { n: i64, k: i64 },
    #[error("bound {bound} exceeds the soft limit {limit}; an explicit override is required")]
    BoundTooLarge { bound: i64, limit: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("line {line}: {detail}")]
    StoreLine { line: usize, detail: String },
    #[error("line {line}: unsupported schema {found:?}")]
    SchemaMismatch { line: usize, found: String },
    #[error("line {line}: inconsistent field `{field}`: {detail}")]
    Inconsistent {
        line: usize,
        field: &'static str,
        detail: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl FanoError {
    pub fn code(&self) -> &'static str {
        match self {
            FanoError::ZeroPoint => "zero_point",
            FanoError::NotPrimitive { .. } => "not_primitive",
            FanoError::Collinear { .. } => "collinear",
            FanoError::OriginNotInterior => "origin_not_interior",
            FanoError::TooFewVertices(_) => "too_few_vertices",
            FanoError::DuplicatePoint { .. } => "duplicate_point",
            FanoError::NotUnimodular(_) => "not_unimodular",
            FanoError::InvalidTriangleParams { .. } => "invalid_triangle_params",
            FanoError::SmoothSingularity => "smooth_singularity",
            FanoError::InvalidSingularity { .. } => "invalid_singularity",
            FanoError::BoundTooLarge { .. } => "bound_too_large",
            FanoError::Parse(_) => "parse",
            FanoError::StoreLine { .. } => "store_line",
            FanoError::SchemaMismatch { .. } => "schema_mismatch",
            FanoError::Inconsistent { .. } => "inconsistent_record",
            FanoError::Io(_) => "io",
        }
    }
}

pub type Result<T, E = FanoError> = std::result::Result<T, E>;
