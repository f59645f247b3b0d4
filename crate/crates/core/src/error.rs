use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {n} is outside 1..={max}")]
    GroundSizeOutOfRange { n: usize, max: usize },
    #[error("subset mask {mask} is out of range for n = {n}")]
    MaskOutOfRange { mask: u32, n: usize },
    #[error("expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("ground set sizes differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("rank {k} exceeds ground set size {n}")]
    RankOutOfRange { k: usize, n: usize },
    #[error("empty circuit")]
    EmptyCircuit,
    #[error("circuit family is not an antichain: {0:#b} is contained in {1:#b}")]
    NotAntichain(u32, u32),
    #[error("low-order table is missing the value for mask {0}")]
    IncompleteTable(u32),
    #[error("mask {0} is dependent and cannot carry a basis coefficient")]
    DependentCoefficient(u32),
    #[error("operation requires n <= {max}, got {n}")]
    SizeCapExceeded { n: usize, max: usize },
    #[error("no separation exists when k = {k} >= n = {n}")]
    NoSeparation { n: usize, k: usize },
    #[error("invalid network: {0}")]
    InvalidNetwork(&'static str),
    #[error("scalar operand required for scaling")]
    ScalarOperandRequired,
    #[error("mask {mask} has more than {k} elements")]
    MaskTooLarge { mask: u32, k: usize },
    #[error("not a permutation")]
    InvalidPermutation,
    #[error("wrong number of operands for composition")]
    OperandCount,
    #[error("trial count must be positive")]
    NoTrials,
}
