use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ω^E must be a nonzero even-sized square matrix, got {rows}×{cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("ω^E is not skew-symmetric")]
    NotSkew,
    #[error("ω^E is degenerate")]
    Degenerate,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis change of H must have determinant 1, got {0}")]
    DeterminantNotOne(String),
    #[error("structure relations violated: {0}")]
    RelationsViolated(&'static str),
    #[error("eigenspaces of J have dimensions {plus} and {minus}")]
    UnequalEigenspaces { plus: usize, minus: usize },
    #[error("metric is not Hermitian: {0}")]
    NotHermitian(&'static str),
    #[error("subspace is not transversal to h₂ ⊗ E in the given basis")]
    NotTransversal,
    #[error("αId + γT is not invertible on F for this basis change")]
    SingularPencil,
    #[error("subspace is not pure: it contains a nonzero para-quaternionic subspace")]
    NotPure,
    #[error("subspace has no U^(F,T) presentation in any basis")]
    NoPresentation,
    #[error("operator is not in the stabilizer of the subspace")]
    NotInStabilizer,
    #[error("witness has the wrong type: {0}")]
    WrongWitness(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
