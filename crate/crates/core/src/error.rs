use thiserror::Error;

/// Errors raised by the simulator.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("profile support crosses zero frequency: omega0/sigma = {ratio:.3} < 5")]
    SupportCrossesZero { ratio: f64 },

    #[error(
        "Parseval defect {defect:.3e} exceeds {limit:.1e}; the Rindler-frequency grid is too narrow or too coarse"
    )]
    IncompleteSpread { defect: f64, limit: f64 },

    #[error("detector band [{lo:.6e}, {hi:.6e}] lies outside the spread grid [{grid_lo:.6e}, {grid_hi:.6e}]")]
    BandOutsideGrid { lo: f64, hi: f64, grid_lo: f64, grid_hi: f64 },

    #[error("unknown mode label {0}")]
    UnknownMode(String),

    #[error("invalid mode set: {0}")]
    InvalidModeSet(String),

    #[error("matrix is not unitary (deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("operator is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("trace {trace:.12} deviates from 1 by more than {limit:.1e}")]
    BadTrace { trace: f64, limit: f64 },

    #[error("subsystem index {index} out of range for {count} subsystems")]
    BadSubsystem { index: usize, count: usize },

    #[error("peaked-detector validity ratio {ratio:.4} at Omega_det = {omega_det:.4} is not below 0.1")]
    ValidityViolation { ratio: f64, omega_det: f64 },

    #[error("truncation tail {tail:.3e} at n_max = {n_max} exceeds tolerance {tol:.1e}")]
    TruncationTail { tail: f64, n_max: usize, tol: f64 },

    #[error("brute-force cost {predicted:.3e} amplitude updates exceeds budget {budget:.3e} (m = {bins} bins, n = {n_max}; growth ~ a(n)^m with a(n) = {base:.1})")]
    BudgetExceeded { predicted: f64, budget: f64, bins: usize, n_max: usize, base: f64 },

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter { name, reason: reason.into() }
}
