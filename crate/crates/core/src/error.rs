use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("network size must be at least 1")]
    ZeroSize,
    #[error("step list is empty")]
    EmptySteps,
    #[error("step {index} is congruent to 0 mod n")]
    ZeroStep { index: usize },
    #[error("steps {first} and {second} are congruent mod n")]
    DuplicateStep { first: usize, second: usize },
    #[error("network is disconnected: gcd(steps, n) = {gcd}")]
    Disconnected { gcd: u64 },
    #[error("expected a vector with {expected} coordinates, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("{op} does not support {r} steps")]
    UnsupportedArity { op: &'static str, r: usize },
    #[error("weight vector is not generic: tie between minimal routings at vertex {vertex}")]
    WeightTie { vertex: u64 },
    #[error("invalid weight vector: {0}")]
    InvalidWeight(String),
    #[error("expected {expected} cells, got {found}")]
    CellCount { expected: usize, found: usize },
    #[error("cell {vertex} does not route to vertex {vertex}")]
    WrongVertex { vertex: u64 },
    #[error("cell {vertex} is not a minimal routing")]
    NotMinimal { vertex: u64 },
    #[error("cell {vertex} is not down-closed in coordinate {coord}")]
    NotDownClosed { vertex: u64, coord: usize },
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("bad lift parameters: {0}")]
    BadLiftParams(String),
    #[error("bad family parameters: {0}")]
    BadFamilyParams(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("unexpected staircase with {0} generators")]
    UnexpectedShape(usize),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroSize => "ZeroSize",
            Error::EmptySteps => "EmptySteps",
            Error::ZeroStep { .. } => "ZeroStep",
            Error::DuplicateStep { .. } => "DuplicateStep",
            Error::Disconnected { .. } => "Disconnected",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::UnsupportedArity { .. } => "UnsupportedArity",
            Error::WeightTie { .. } => "WeightTie",
            Error::InvalidWeight(_) => "InvalidWeight",
            Error::CellCount { .. } => "CellCount",
            Error::WrongVertex { .. } => "WrongVertex",
            Error::NotMinimal { .. } => "NotMinimal",
            Error::NotDownClosed { .. } => "NotDownClosed",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::BadLiftParams(_) => "BadLiftParams",
            Error::BadFamilyParams(_) => "BadFamilyParams",
            Error::Overflow(_) => "Overflow",
            Error::UnexpectedShape(_) => "UnexpectedShape",
            Error::Inconsistent(_) => "Inconsistent",
            Error::Parse(_) => "Parse",
        }
    }
}
