use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported Coxeter type {0:?}")]
    UnsupportedType(String),
    #[error("rank {rank} is not valid for type {family}")]
    InvalidRank { family: String, rank: usize },
    #[error("element limit of {limit} exceeded while enumerating")]
    ElementLimit { limit: usize },
    #[error("product falls outside the length bound {bound}")]
    OutOfBound { bound: usize },
    #[error(
        "parabolic subgroup on generators {generators:?} is not contained in the table (infinite or bound too small)"
    )]
    ParabolicNotContained { generators: Vec<usize> },
    #[error("generator subset {sub:?} is not contained in {sup:?}")]
    NotSubset { sub: Vec<usize>, sup: Vec<usize> },
    #[error("generator index {0} out of range")]
    GeneratorIndex(usize),
    #[error("system is not affine: {0}")]
    NotAffine(String),
    #[error("power series constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("matrix series constant term is not the identity")]
    NonIdentityConstantTerm,
    #[error("division by {divisor} is not exact in the coefficient ring")]
    InexactDivision { divisor: i64 },
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Representation(#[from] RelationViolation),
    #[error("scalar field has characteristic {0}; determinant identities need characteristic zero")]
    PositiveCharacteristic(u64),
    #[error("invalid scheme: {0}")]
    InvalidScheme(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is not regular: vertex {vertex} has degree {degree}, expected {expected}")]
    NotRegular { vertex: usize, degree: usize, expected: usize },
    #[error("torus quotient: {0}")]
    Torus(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("identity check failed: {0}")]
    Identity(String),
}

/// Which defining relation a candidate representation breaks.
#[derive(Debug, Error, Clone, PartialEq, serde::Serialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum RelationViolation {
    #[error("expected {expected} generator matrices, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("generator s{generator} is not a {dim}x{dim} matrix")]
    Dimension { generator: usize, dim: usize },
    #[error("quadratic relation (e+1)(e-q)=0 fails for s{generator}")]
    Quadratic { generator: usize },
    #[error("braid relation of length {m} fails for s{s}, s{t}")]
    Braid { s: usize, t: usize, m: u32 },
    #[error("products along reduced words disagree for element {word}")]
    PathDependence { word: String },
}
