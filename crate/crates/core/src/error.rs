use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("elements live in different order structures (dual flag mismatch)")]
    FlagMismatch,
    #[error("element is not {e}-regular")]
    NotRegular { e: i64 },
    #[error("enumeration cap exceeded: required length bound {required}, cap {cap}")]
    CapExceeded { required: usize, cap: usize },
    #[error("element does not lie in any corridor of Adm(e·eta0)")]
    NotInCorridor,
    #[error("presentations are not zeta-compatible")]
    IncompatiblePresentations,
    #[error("presentation depth {have} is below the required bound {needed}")]
    DepthTooShallow { needed: i64, have: i64 },
    #[error("weight is not p-restricted")]
    NotRestricted,
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("partition does not match the weight data: {0}")]
    PartitionMismatch(String),
    #[error("operation is only defined for rank {expected}, got {got}")]
    WrongRank { expected: usize, got: usize },
    #[error("ramification index {e} too large for this comparison (requires e <= p-1)")]
    RamificationTooLarge { e: i64 },
    #[error("no zeta-compatible presentation exists for the requested class")]
    NoCompatiblePresentation,
    #[error("exhibiting type does not have extremal shape")]
    ShapeNotExtremal,
    #[error("element is not in the required W_a coset")]
    WrongCoset,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
