use thiserror::Error;

/// Errors raised by the polynomial, basis and operator layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("variable names differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    #[error("not divisible: nonzero remainder in exact division")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not symmetric in {0} variables")]
    NotSymmetric(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("input is not in the image of the separating operator")]
    NotInImage,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("integration domain violated: {0}")]
    Domain(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
