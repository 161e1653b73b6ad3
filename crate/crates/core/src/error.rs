//! Error types shared by all solver and diagnostic modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    /// A field's value count does not match its grid.
    #[error("dimension mismatch: expected {expected} values for the grid, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A Fourier multiplier evaluated to NaN/∞ on the lattice; the caller
    /// should switch to a δ-regularized weight.
    #[error("multiplier overflow at frequency {frequency:?} (value {value})")]
    MultiplierOverflow { frequency: Vec<f64>, value: f64 },

    /// Mass at or below machine epsilon; moments are meaningless.
    #[error("degenerate state: mass {mass} is not positive")]
    DegenerateState { mass: f64 },

    /// A directional temperature equals the total energy, so the diffusion
    /// matrix loses ellipticity.
    #[error("degenerate temperature: C1 = {c1} is not positive (T = {temps:?})")]
    DegenerateTemperature { c1: f64, temps: Vec<f64> },

    /// Normalization would translate the state by more than half the box.
    #[error("domain too small: requested shift {shift} exceeds half-width {half_width}")]
    DomainTooSmall { shift: f64, half_width: f64 },

    /// A scenario/solver parameter violates its admissibility constraint.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// Time step violates the explicit stability rule.
    #[error("time step {dt} exceeds stability limit {limit}")]
    CflViolation { dt: f64, limit: f64 },

    /// A quadrature or time loop failed to converge / produced NaN.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// NaN detected during evolution; carries the last healthy time.
    #[error("solution lost finiteness at t = {t}; last good state at t = {last_good_t}")]
    NanAbort { t: f64, last_good_t: f64 },
}

pub type Result<T> = std::result::Result<T, CoreError>;
