use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operands belong to different algebras (`{left}` and `{right}`)")]
    AlgebraMismatch { left: String, right: String },

    #[error("expected {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("unit law fails for basis element {0}")]
    UnitLaw(usize),

    #[error("malformed algebra description: {0}")]
    InvalidAlgebra(String),

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("element is not invertible")]
    NotInvertible,

    #[error("strategy `{strategy}` does not apply: {reason}")]
    InapplicableStrategy {
        strategy: &'static str,
        reason: String,
    },

    #[error("leading coefficient cannot be reduced at degree {degree}")]
    NotReducible { degree: usize, stuck: String },

    #[error("expected a polynomial of degree 1, got degree {0:?}")]
    NotDegreeOne(Option<usize>),

    #[error("{0}")]
    Precondition(String),

    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
