//! Pseudo-spectral solver for the spatially homogeneous Landau equation
//! with Maxwellian molecules, plus its conservation and smoothing
//! certificates.

pub mod certificate;
pub mod coefficients;
pub mod collision;
pub mod evolve;

pub use certificate::{smoothing_certificate, CertificateRow, SmoothingCertificate};
pub use coefficients::{coefficients_from_state, LandauCoefficients};
pub use collision::LandauOperator;
pub use evolve::{
    conservation_drift, evolve, stability_dt, temperature_relaxation_rate, EvolutionTrace,
    EvolveOptions,
};
