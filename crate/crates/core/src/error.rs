use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // field construction and arithmetic
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("field order {p}^{e} exceeds the supported maximum of 65536")]
    OrderTooLarge { p: u32, e: u32 },
    #[error("modulus is not a monic irreducible polynomial of degree {e} over GF({p})")]
    BadModulus { p: u32, e: u32 },
    #[error("operands belong to different fields or lie outside the field")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{n} does not divide q - 1 = {q_minus_one}")]
    NotADivisor { n: u64, q_minus_one: u32 },
    #[error("additive subgroup degree {l} must satisfy 1 <= l <= {e}")]
    BadSubgroupDegree { l: u32, e: u32 },

    // polynomials
    #[error("interpolation nodes are not pairwise distinct")]
    DuplicateNode,
    #[error("polynomial degree {degree} exceeds the bound {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },

    // matrices and linear codes
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("work of {needed} items exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("minimum-distance oracles disagree: {0}")]
    OracleDisagreement(String),

    // GRS codes
    #[error("locators are not pairwise distinct")]
    DuplicateLocator,
    #[error("multiplier at position {0} is zero")]
    ZeroMultiplier(usize),
    #[error("dimension k = {k} must satisfy 1 <= k <= n = {n}")]
    InvalidDimension { n: usize, k: usize },
    #[error("extended codes require all q = {q} field elements as locators, got {got}")]
    ExtendedLocators { q: u32, got: usize },
    #[error("explicit GRS duals are only defined for non-extended codes with k < n")]
    ExtendedNotSupported,

    // constructions
    #[error("constructions require odd characteristic, got p = 2")]
    EvenCharacteristic,
    #[error("constructions require q > 3, got q = {0}")]
    QTooSmall(u32),
    #[error("k = {k} is outside 1 < k <= floor({n}/2)")]
    KOutOfRange { n: usize, k: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("no valid multiplier for coordinate {0}")]
    NoValidMultiplier(usize),
    #[error(
        "none of the five GRS constructions applies to q = {q}, n = {n}, k = {k} \
         (this does not rule out an LCD MDS code with these parameters)"
    )]
    NoConstructionApplies { q: u32, n: usize, k: usize },
    #[error("theorem conclusion violated: {0}")]
    TheoremViolation(String),
    #[error("invalid override: {0}")]
    InvalidOverride(String),
}
