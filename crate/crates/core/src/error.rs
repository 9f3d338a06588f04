use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("negative argument: {0}")]
    NegativeArgument(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("jet order {have} is below the required {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("invalid ASM: {0}")]
    InvalidAsm(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("non-real coefficient: {0}")]
    NonReal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
