//! Mass, momentum, energy and directional temperatures of velocity fields,
//! plus the normalization map (unit mass, zero mean velocity).

use super::field::{apply_multiplier, Field, Transform};
use super::grid::Grid;
use crate::error::{CoreError, Result};
use serde::{Deserialize, Serialize};

/// Conserved moments of a velocity distribution.
///
/// `directional_t[j]` is T_j = ∫ f v_j² dv and `c1 = min_j (T₀ − T_j)` is the
/// ellipticity constant of the Landau diffusion matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentSet {
    pub mass: f64,
    pub momentum: Vec<f64>,
    pub energy_t0: f64,
    pub directional_t: Vec<f64>,
    pub c1: f64,
}

/// Rectangle-rule moments of a velocity-only field.
pub fn moments(f: &Field) -> Result<MomentSet> {
    let grid = f.grid();
    if grid.dim_x() != 0 {
        return Err(CoreError::Configuration(
            "moments require a velocity-only grid; integrate over x first".into(),
        ));
    }
    let d = grid.dim_v();
    let vol = grid.cell_volume();
    let mut coords = vec![0.0; d];

    let mut mass = 0.0;
    let mut momentum = vec![0.0; d];
    let mut tj = vec![0.0; d];
    for (flat, &v) in f.values().iter().enumerate() {
        grid.point_coords(flat, &mut coords);
        mass += v;
        for j in 0..d {
            momentum[j] += v * coords[j];
            tj[j] += v * coords[j] * coords[j];
        }
    }
    mass *= vol;
    for j in 0..d {
        momentum[j] *= vol;
        tj[j] *= vol;
    }
    if mass <= f64::EPSILON {
        return Err(CoreError::DegenerateState { mass });
    }
    let energy_t0: f64 = tj.iter().sum();
    let c1 = tj
        .iter()
        .map(|t| energy_t0 - t)
        .fold(f64::INFINITY, f64::min);
    Ok(MomentSet {
        mass,
        momentum,
        energy_t0,
        directional_t: tj,
        c1,
    })
}

/// Rescale to unit mass and translate (spectrally) to zero mean velocity.
/// Energy is recorded by the caller, not rescaled.
pub fn normalize(f: &Field) -> Result<Field> {
    let m = moments(f)?;
    let grid = f.grid();
    let mean: Vec<f64> = m.momentum.iter().map(|p| p / m.mass).collect();
    let half = grid.half_width_v();
    for &s in &mean {
        if s.abs() > 0.5 * half {
            return Err(CoreError::DomainTooSmall {
                shift: s.abs(),
                half_width: half,
            });
        }
    }

    let mut scaled = f.clone();
    scaled.scale(1.0 / m.mass);
    if mean.iter().all(|s| s.abs() < 1e-300) {
        return Ok(scaled);
    }

    // f_new(v) = f(v + mean) ⇔ f̂_new(ξ) = e^{i ξ·mean} f̂(ξ)
    let tr = Transform::new(grid);
    let spec = tr.forward(&scaled);
    let shifted = apply_multiplier_complex(&spec, |freqs: &[f64]| {
        let phase: f64 = freqs.iter().zip(&mean).map(|(x, s)| x * s).sum();
        num_complex::Complex64::new(phase.cos(), phase.sin())
    });
    Ok(tr.inverse(&shifted))
}

fn apply_multiplier_complex(
    spec: &super::field::SpectralField,
    m: impl Fn(&[f64]) -> num_complex::Complex64,
) -> super::field::SpectralField {
    let grid = spec.grid();
    let dims = grid.dims();
    let mut freqs = vec![0.0; dims];
    let coeffs = spec
        .coeffs()
        .iter()
        .enumerate()
        .map(|(flat, c)| {
            grid.mode_freqs(flat, &mut freqs);
            c * m(&freqs)
        })
        .collect();
    super::field::SpectralField::new(grid, coeffs).expect("same grid")
}

/// Sanity helper used by property tests: moments are invariant under the
/// identity multiplier followed by the inverse transform.
pub fn moments_after_identity_roundtrip(f: &Field) -> Result<MomentSet> {
    let tr = Transform::new(f.grid());
    let spec = tr.forward(f);
    let same = apply_multiplier(&spec, |_| 1.0)?;
    moments(&tr.inverse(&same))
}

/// Default grid builder used across tests and presets: velocity box with
/// L = 12, sized for unit-temperature data.
pub fn default_velocity_grid(dim_v: usize, n: usize) -> Result<Grid> {
    Grid::velocity(dim_v, n, 12.0)
}
