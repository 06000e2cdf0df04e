use thiserror::Error;

use crate::lattice2d::LatticeVector2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vector {0} is not primitive")]
    NotPrimitive(LatticeVector2),
    #[error("degenerate cone: {0} and {1} are not positively oriented")]
    DegenerateCone(LatticeVector2, LatticeVector2),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("vertex {vertex} is not balanced (defect {defect})")]
    Unbalanced { vertex: usize, defect: i64 },
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(usize),
    #[error("mutation undefined: {0}")]
    MutationUndefined(String),
    #[error("gcd undefined: all entries are zero")]
    GcdUndefined,
    #[error("{0}")]
    OutOfRange(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
