use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DahaError {
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("imaginary root α({0},{1})")]
    ImaginaryRoot(i64, i64),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("box ({0},{1}) is not in the diagram")]
    BoxNotInDiagram(i64, i64),
    #[error("pole at t = 0 of order {order} on {window:?}")]
    PoleAtZero { window: Vec<i64>, order: i64 },
    #[error("denominator z_{0} - z_{1} vanishes identically")]
    IdenticallyZeroDenominator(i64, i64),
    #[error("factor {position} is not matched: expected root {expected}, got {got}")]
    Mismatch {
        position: usize,
        expected: String,
        got: String,
    },
    #[error("element has grade {0}, expected 0")]
    NonzeroGrade(i64),
    #[error("eigenvalues at {0} and {1} coincide")]
    Pole(i64, i64),
    #[error("s_{0} T is not standard")]
    NonstandardTarget(usize),
    #[error("character mismatch")]
    CharacterMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, DahaError>;
