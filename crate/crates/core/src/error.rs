use thiserror::Error;

/// Crate-wide error type. Input errors carry enough position information
/// for the CLI to print actionable diagnostics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("mismatched characteristic: {0} vs {1}")]
    MismatchedP(u32, u32),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dim(String),

    #[error("sigma^p is not the identity")]
    SigmaOrder,

    #[error("central datum x is not fixed by sigma")]
    XNotFixed,

    #[error("invalid invariant tuple: {0}")]
    InvalidInvariants(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: Pos, msg: String },

    #[error("augmentation error: {0}")]
    Augmentation(String),

    #[error("presentation error: {0}")]
    Presentation(String),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("p must be > 3 for this extension family (got {0})")]
    SmallP(u32),

    #[error("{0}")]
    Unsupported(String),

    #[error("io error on {path}: {err}")]
    Io { path: String, err: String },
}

/// Position inside an input text: byte-based line and column, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl Pos {
    pub fn start() -> Self {
        Pos { line: 1, col: 1 }
    }
}

impl std::fmt::Display for Pos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
