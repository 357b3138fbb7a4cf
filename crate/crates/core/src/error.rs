use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("divergent integral: {0}")]
    DivergentIntegral(&'static str),
    #[error("unsupported case: {0}")]
    UnsupportedCase(&'static str),
    #[error("elliptic modulus out of range: k^2 = {0}")]
    ModulusOutOfRange(f64),
    #[error("roots must satisfy a > b > c > d, got ({a}, {b}, {c}, {d})")]
    BadOrdering { a: f64, b: f64, c: f64, d: f64 },
    #[error("pole of s^-1 on or at the end of the integration interval")]
    PoleOnInterval,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("argument {0} outside the region of convergence")]
    OutOfConvergenceRegion(f64),
    #[error("function undefined at {0}")]
    UndefinedAt(String),
    #[error("point is not inside a chamber of the amoeba")]
    NotInChamber,
    #[error("bad coefficients: {0}")]
    BadCoefficients(&'static str),
    #[error("tolerance {requested:e} not met, estimated error {achieved:e}")]
    ToleranceNotMet { requested: f64, achieved: f64 },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("box too small: coverage {coverage:.4} below {required:.4}")]
    BoxTooSmall { coverage: f64, required: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
