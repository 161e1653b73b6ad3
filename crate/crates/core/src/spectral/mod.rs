//! Grid geometry, DFT contract, multipliers, moments and norms — the
//! substrate every solver and diagnostic uses.

pub mod fft;
pub mod field;
pub mod grid;
pub mod moments;

pub use field::{
    apply_multiplier, forward_transform, inverse_transform, log_weighted_norm, weighted_norm,
    Field, SpectralField, Transform,
};
pub use grid::{AxisKind, Grid};
pub use moments::{default_velocity_grid, moments, normalize, MomentSet};
