//! Pseudo-spectral solvers and Fourier-side diagnostics for three kinetic
//! Cauchy problems: the spatially homogeneous Landau equation with Maxwellian
//! molecules, the linear Fokker-Planck equation, and a linear model of the
//! spatially inhomogeneous Landau equation.
//!
//! The crate is organised around a small spectral substrate:
//!
//! * [`spectral`] — periodic grids, unitary DFTs, Fourier multipliers,
//!   moments and weighted norms;
//! * [`exact`] — closed-form solutions (generalized Kolmogorov,
//!   Fokker-Planck in Fourier variables) and phase integrals;
//! * [`weights`] — the time-growing exponential multiplier families used to
//!   certify smoothing, with their δ-regularized variants;
//! * [`landau`] — the homogeneous Landau solver and its conservation /
//!   smoothing certificates;
//! * [`kinetic`] — phase-space (x,v) solvers built on Strang splitting;
//! * [`diagnostics`] — Gevrey-class fits of spectral decay, the phase-integral
//!   inequality scanner, and ratio-curve reports.
//!
//! All solver states are immutable between steps and all diagnostics are pure
//! functions, so everything here is safe to drive from multiple threads.

pub mod diagnostics;
pub mod error;
pub mod exact;
pub mod kinetic;
pub mod landau;
pub mod presets;
pub mod quad;
pub mod spectral;
pub mod weights;

pub use error::{CoreError, Result};
pub use spectral::{Field, Grid, MomentSet, SpectralField};
pub use weights::{MultiplierSpec, PhaseParams, WeightKind};
