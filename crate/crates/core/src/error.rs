use thiserror::Error;

/// Errors shared by every numerical module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("t = {t} is below the supported height (t >= {min})")]
    BelowSupport { t: f64, min: f64 },

    #[error("{what} = {value} lies outside the table domain [{lo}, {hi}]")]
    OutOfDomain {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("forward iterate {iterate} of t = {start} left the table domain at {value}")]
    DomainEscape { start: f64, iterate: u32, value: f64 },

    #[error("no bracket for target {target} inside [{lo}, {hi}]; extend the table domain")]
    BracketFailure { target: f64, lo: f64, hi: f64 },

    #[error("root solve did not converge within {iterations} iterations")]
    Convergence { iterations: usize },

    #[error("quadrature stalled at error {achieved:e} (requested {requested:e})")]
    QuadratureNonconvergence { requested: f64, achieved: f64 },

    #[error("step policy failure near t = {t}: local error {achieved:e} exceeds budget {budget:e}")]
    StepPolicy { t: f64, achieved: f64, budget: f64 },

    #[error("g = {g} violates the admissibility guard g <= {limit} at T = {t}")]
    GuardViolation { g: f64, t: f64, limit: f64 },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
