use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter d must be nonzero")]
    ZeroParameter,
    #[error("rho must be positive, got {0}")]
    NonPositiveRho(String),
    #[error("closed form only covers denominators q <= 5, got q = {0}")]
    UnsupportedDenominator(String),
    #[error("target divisible by 8 unreachable: {0}")]
    UnreachableTarget(u64),
    #[error("target must be positive")]
    ZeroTarget,
    #[error("degenerate spectrum: {0}")]
    DegenerateSpectrum(String),
    #[error("integration produced non-finite values at x = {0}")]
    NonFinite(f64),
    #[error("singular recurrence step at k = {0}")]
    SingularStep(i64),
    #[error("sqrt(rho) = sqrt({0}) is irrational; exact mode unavailable")]
    IrrationalScale(String),
    #[error("value {0} exceeds the supported integer range")]
    Overflow(String),
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
