use thiserror::Error;

/// Errors raised by the jet algebra, the directional-derivative routines,
/// the finite-difference comparator and the kinematics models.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pure dual number (zero real part) has no multiplicative inverse")]
    PureDualNotInvertible,

    #[error("{function} is undefined at real part {real_part}")]
    Domain { function: &'static str, real_part: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("empty index list")]
    EmptyIndexList,

    #[error("{0} indices given, at most four are supported")]
    MoreThanFourIndices(usize),

    #[error("jet part {0} out of range 0..=4")]
    PartOutOfRange(usize),

    #[error("invalid derivative order {0}, expected 1..=4")]
    InvalidOrder(usize),

    #[error("approximation order must be at least 1")]
    InvalidApproximationOrder,

    #[error("step size must be positive, got {0}")]
    InvalidStep(f64),

    #[error("dimension {m} exceeds the brute-force cap {cap}")]
    DimensionCap { m: usize, cap: usize },

    #[error("axis is not a unit vector (norm {norm})")]
    NonUnitAxis { norm: f64 },

    #[error("joint rates up to order {required} are required, got {given}")]
    InsufficientRateOrder { required: usize, given: usize },

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
