use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("gcd of generators is {0}, not 1: the complement would be infinite")]
    GcdNotOne(u64),

    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(u64),
    #[error("the ideal is not proper (empty complement)")]
    NotProper,
    #[error("complement is not closed under division in the semigroup: {0} is missing")]
    NotAnIdeal(u64),
    #[error("lambda = {value} has {pairs} gap pair(s) summing to it, so it leads no maximum sparse ideal")]
    NotALeader { value: u64, pairs: usize },
    #[error("ideal is not maximum sparse")]
    NotMaximumSparse,
    #[error("ideals belong to different semigroups")]
    DifferentParents,
    #[error("index {0} must be at least 1")]
    IndexOutOfRange(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field of order {0} exceeds 256")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,

    #[error("duplicate evaluation points")]
    DuplicatePoints,
    #[error("point ({x}, {y}) is not on the curve")]
    PointNotOnCurve { x: u8, y: u8 },
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("point index {0} out of range")]
    PointIndexOutOfRange(usize),
    #[error("search space of {0} candidates exceeds the exhaustive limit")]
    SearchSpaceTooLarge(u128),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("exhaustive enumeration over {points} points is refused; use sampling mode")]
    TooManySubsets { points: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
