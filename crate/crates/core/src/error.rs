use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("division by zero in Q(zeta_8)")]
    DivisionByZero,

    #[error("sign requested for non-real element {0}")]
    NonRealSign(String),

    #[error("not a valid Cartan matrix: {0}")]
    NotCartanMatrix(String),

    #[error("element is not nilpotent")]
    NotNilpotent,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
