use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation at byte {pos}: {msg}")]
    Malformed { pos: usize, msg: &'static str },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("images do not form a bijection of 1..={0}")]
    NotBijection(usize),
    #[error("empty generator list")]
    NoGenerators,
    #[error("seed point {0} is not in the orbit")]
    SeedOutsideOrbit(usize),
    #[error("negative input to integer square root")]
    NegativeSqrt,
    #[error("zero is not in any square class")]
    ZeroSquareClass,
    #[error("degenerate parameter: {0}")]
    Degenerate(&'static str),
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("wreath predictor supports n in {{2, 3}}, got {0}")]
    UnsupportedWreath(usize),
    #[error("permutation does not map blocks to blocks")]
    BlockViolation,
    #[error("fiber product needs surjective sign characters")]
    NotSurjective,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("too few good primes: found {found} within {searched} primes")]
    TooFewGoodPrimes { found: usize, searched: usize },
    #[error("identity check failed: {0}")]
    IdentityFailed(String),
    #[error("inconsistent configuration: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
