use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("zero vector has no primitive generator")]
    ZeroVector,
    #[error("invalid root system: {0}")]
    RootSystem(String),
    #[error("unknown simple root {0}")]
    UnknownRoot(String),
    #[error("invalid datum: {}", .0.join("; "))]
    InvalidDatum(Vec<String>),
    #[error("invalid colored cone: {}", .0.join("; "))]
    InvalidCone(Vec<String>),
    #[error("unknown color label {0}")]
    UnknownColor(String),
    #[error("unknown catalog entry {0}")]
    UnknownEntry(usize),
    #[error("parameters out of domain for entry {id}: {reason}")]
    BadParameters { id: usize, reason: String },
    #[error("document error: {0}")]
    Document(String),
}
