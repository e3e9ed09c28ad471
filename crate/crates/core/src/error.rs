use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring descriptor mismatch: {0}")]
    DescriptorMismatch(String),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group enumeration exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("character value {0} is not a unit")]
    NonUnitValue(String),
    #[error("inconsistent character: {0}")]
    InconsistentCharacter(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeOverflow { degree: usize, max: usize },
    #[error("index space of {size} tuples exceeds the cap of {cap}")]
    IndexSpaceTooLarge { size: u128, cap: u128 },
    #[error("invalid multi-index: {0}")]
    InvalidIndex(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid character sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid monomial module: {0}")]
    InvalidModule(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
}
