use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("hook status is undefined for the empty partition")]
    EmptyShape,

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("cannot combine symmetric functions in different bases or degrees")]
    BasisMismatch,

    #[error("singular transition matrix in degree {0}")]
    Singular(usize),

    #[error("coefficient {0} is not an integer")]
    NonInteger(String),

    #[error("{what} of size {size} exceeds the limit of {limit}")]
    Guard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error(
        "poset is not (3+1)-free: elements {a} < {b} < {c} form a chain and {d} is incomparable to all three",
        a = .0[0], b = .0[1], c = .0[2], d = .0[3]
    )]
    NotThreePlusOneFree([usize; 4]),

    #[error("shape {0} is not a hook")]
    NotAHook(String),

    #[error("shape {0} is a hook; the involution needs the cell (2,2)")]
    IsAHook(String),

    #[error("orientation contains a directed cycle")]
    CyclicOrientation,

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid P-tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid rim hook tabloid: {0}")]
    InvalidTabloid(String),

    #[error("cannot start worker pool: {0}")]
    WorkerPool(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
