use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator vanishes at q = {0}")]
    Pole(String),

    #[error("specialization q = {0} is excluded (q^2 must differ from 1 and q from 0)")]
    ForbiddenSpecialization(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("quantum-plane relation XY = q^2 YX fails")]
    QuantumPlaneRelation,

    #[error("representation is not a U_q(sl_2)-comodule: {0}")]
    Validation(String),

    #[error("invalid JSON payload: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
