use crate::space::Space;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("space mismatch: {left} vs {right}")]
    SpaceMismatch { left: Space, right: Space },
    #[error("empty set has no supremum")]
    EmptySet,
    #[error("negative input: {0}")]
    NegativeInput(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("kernel invariant broken: {0}")]
    KernelBug(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
