use thiserror::Error;

use crate::exactnum::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("malformed spec: {0}")]
    Malformed(String),
    #[error("no pivot supplied")]
    MissingPivot,
    #[error("grade not available: {0}")]
    Grade(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not an intertwiner: {0}")]
    NotIntertwiner(String),
    #[error("functional is not group-like")]
    NotGroupLike,
    #[error("map is not an algebra automorphism")]
    NotAutomorphism,
    #[error("module is not projective over the given algebra")]
    NotProjective,
    #[error("subalgebra is not unimodular")]
    NotUnimodular,
    #[error("embedding is not multiplicative")]
    NotMultiplicative,
    #[error("unsupported family: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
