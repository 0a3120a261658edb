use thiserror::Error;

/// Errors produced by the exact-arithmetic core.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("matrix is not unipotent")]
    NotUnipotent,

    #[error("entries must be integers for this test")]
    NonIntegralEntries,

    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid lattice spec: {0}")]
    InvalidSpec(String),

    #[error("first components of the pairs do not span the algebra")]
    Underdetermined,

    #[error("pair list is inconsistent: no linear map sends sources to targets")]
    InconsistentPairs,

    #[error("{what}: search cap {cap} exceeded")]
    CapExceeded { what: String, cap: u64 },

    #[error("witness check failed: {0}")]
    WitnessFailed(String),

    #[error("partial automorphisms belong to different lattice specs")]
    DifferentSpecs,

    #[error("subgroup class cannot be resolved: {0}")]
    UnresolvableClass(String),

    #[error("invalid partial automorphism: {0}")]
    InvalidPartialAutomorphism(String),

    #[error("zero exponent not allowed")]
    ZeroExponent,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    pub fn cap(what: impl Into<String>, cap: u64) -> Self {
        Error::CapExceeded {
            what: what.into(),
            cap,
        }
    }
}
