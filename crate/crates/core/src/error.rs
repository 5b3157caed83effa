use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("not finite dimensional: paths of length {cap} do not all reduce to zero")]
    NotFiniteDimensional { cap: usize },
    #[error("module does not satisfy the relations: {0}")]
    InvalidModule(String),
    #[error("not a submodule: {0}")]
    NotSubmodule(String),
    #[error("radical unavailable: {0}")]
    RadicalUnavailable(String),
    #[error("could not split the endomorphism algebra: {0}")]
    DecompositionInconclusive(String),
    #[error("invalid T-resolution: {0}")]
    InvalidResolution(String),
    #[error("not partial tilting: {0}")]
    NotPartialTilting(String),
    #[error("the quiver has an oriented cycle")]
    NotDirected,
    #[error("the algebra is not hereditary")]
    NotHereditary,
    #[error("the module is not exceptional")]
    NotExceptional,
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}
