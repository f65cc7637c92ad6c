use thiserror::Error;

/// Errors raised by the engine. Indices carried in variants are 1-based so
/// they can be shown to users verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in F")]
    DivisionByZero,
    #[error("unknown variable: index {index} but the ring has {nvars} variables")]
    UnknownVariable { index: usize, nvars: usize },
    #[error("ring mismatch: {left} variables vs {right} variables")]
    RingMismatch { left: usize, right: usize },
    #[error("malformed algebra: {0}")]
    MalformedAlgebra(String),
    #[error("antisymmetry violated at ({alpha},{beta},{gamma})")]
    AntisymmetryViolated {
        alpha: usize,
        beta: usize,
        gamma: usize,
    },
    #[error("mixed algebras")]
    MixedAlgebras,
    #[error("requires at least one variable")]
    RequiresVariable,
    #[error("not a diffeomorphism pair: {0}")]
    NotDiffeomorphism(String),
    #[error("singular deformation")]
    SingularDeformation,
    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("degenerate generating set: rank {rank} < {expected}")]
    DegenerateGeneratingSet { rank: usize, expected: usize },
    #[error("certificate reconstruction failed: {0}")]
    CertificateReconstructionFailed(String),
    #[error("theorem equivalence violated: {0}")]
    TheoremEquivalenceViolated(String),
    #[error("raise degree cap: need at least {needed}, got {cap}")]
    RaiseDegreeCap { needed: usize, cap: usize },
    #[error("exactness solver restricted to constant-coefficient algebras")]
    ExactnessRestricted,
    #[error("wrong degree: expected {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
