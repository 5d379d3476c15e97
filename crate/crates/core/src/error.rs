use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// The pattern's first part would be smaller than its second at this size.
    #[error("pattern {pattern} has no instance at size {size}")]
    PatternTooLarge { pattern: String, size: u32 },

    #[error("cannot remove a box from the empty partition")]
    EmptyPartition,

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },

    /// Enumeration refused; `count` is the exact number of objects that
    /// would have been produced.
    #[error("refusing to enumerate {count} objects (cap {cap})")]
    TooLarge { count: BigUint, cap: u64 },

    #[error("class function is not a character: {reason}")]
    NotACharacter { reason: String },

    #[error("recursion has no nonnegative solution at size {size}")]
    NoSolution { size: u32 },

    #[error("more than {cap} solutions to the recursion at size {size}")]
    SolutionCapExceeded { cap: usize, size: u32 },

    #[error("tabloid row has odd size {0}")]
    OddRow(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
