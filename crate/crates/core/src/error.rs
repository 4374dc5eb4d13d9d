use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("map is not square ({cod}x{dom})")]
    NotSquare { cod: usize, dom: usize },
    #[error("map is not idempotent")]
    NotIdempotent,
    #[error("map is not invertible")]
    NotInvertible,
    #[error("idempotency failed: {0}")]
    IdempotencyFailed(String),
    #[error("base monoid law failed: {0}")]
    FrobeniusCheckFailed(String),
    #[error("unit constraint not invertible: {0}")]
    ConstraintNotInvertible(String),
    #[error("coherence failed: {0}")]
    CoherenceFailed(String),
    #[error("bimodule law failed: {0}")]
    BimoduleLawFailed(String),
    #[error("not a morphism of weak bimonads; failed: {}", .0.join(", "))]
    NotAMorphism(Vec<String>),
    #[error("weak Hopf witness failed: {0}")]
    WhmVerificationFailed(String),
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid braid: {0}")]
    InvalidBraid(String),
    #[error("operation requires the symmetric swap; a custom braid is installed")]
    CustomBraidUnsupported,
    #[error("two constructions of {0} disagree")]
    FormsDisagree(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub(crate) fn check_dim(context: &str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context: context.to_string(),
            expected,
            found,
        })
    }
}
