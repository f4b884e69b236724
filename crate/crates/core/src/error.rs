use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomials live in different rings ({left} vs {right} variables)")]
    LengthMismatch { left: usize, right: usize },

    #[error("the unit monomial cannot be a generator of a proper ideal")]
    UnitGenerator,

    #[error("an ideal needs at least one generator")]
    EmptyIdeal,

    #[error("variable index {index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("malformed structure: {0}")]
    Structural(String),

    #[error("resource cap exceeded: {what} (limit {limit})")]
    ResourceCap { what: &'static str, limit: u64 },

    #[error("theorem invariant violated: {0}")]
    TheoremViolation(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
