use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid diagram: {0}")]
    Diagram(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("singular matrix")]
    Singular,

    #[error("zero polynomial has no normal form")]
    ZeroPolynomial,

    #[error("division is not exact")]
    NotExact,

    #[error("denominator vanishes at t = 1")]
    NotExpandable,

    #[error("evaluation at a pole")]
    Pole,

    #[error("color mismatch: {0}")]
    ColorMismatch(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("{0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, col, msg: msg.into() }
    }

    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
