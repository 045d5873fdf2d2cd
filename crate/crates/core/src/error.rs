use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("not an axis: {0}")]
    NotAnAxis(String),
    #[error("not a primitive axis: {0}")]
    NotPrimitive(String),
    #[error("adjoint is not semisimple: {0}")]
    NotSemisimple(String),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("axis closure exceeded the cap of {0} axes")]
    ClosureCapExceeded(usize),
    #[error("group closure exceeded the cap of {0} elements")]
    GroupCapExceeded(usize),
    #[error("axet is not 2-generated: {0}")]
    NotTwoGenerated(String),
    #[error("invalid 3-transposition group: {0}")]
    InvalidGroup(String),
    #[error("not an axis candidate: {0}")]
    NotAnAxisCandidate(String),
    #[error("unknown catalog entry: {0}")]
    UnknownCatalogEntry(String),
    #[error("not a flip: {0}")]
    NotAFlip(String),
    #[error("axes are not orthogonal: {0}")]
    NotOrthogonal(String),
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
