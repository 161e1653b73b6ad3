//! Initial-data presets. All analytic presets have spectrally controlled
//! truncation error on the default grids; the rough presets are band-limited
//! white noise with a Gaussian velocity envelope (so the periodized drift
//! coefficients never see a boundary jump).

use crate::error::Result;
use crate::spectral::{Field, Grid, Transform};
use crate::weights::norm_sq;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Isotropic Maxwellian with temperature θ per direction (unit mass).
pub fn maxwellian(grid: Grid, theta: f64) -> Field {
    let d = grid.dim_v();
    let dx = grid.dim_x();
    let norm = (2.0 * std::f64::consts::PI * theta).powf(-(d as f64) / 2.0);
    Field::from_fn(grid, |z| {
        let v = &z[dx..];
        norm * (-norm_sq(v) / (2.0 * theta)).exp()
    })
}

/// Product of per-axis Gaussians with directional temperatures `temps`.
pub fn aniso_gaussian(grid: Grid, temps: &[f64]) -> Field {
    assert_eq!(temps.len(), grid.dim_v());
    let dx = grid.dim_x();
    let norm: f64 = temps
        .iter()
        .map(|t| (2.0 * std::f64::consts::PI * t).sqrt().recip())
        .product();
    let temps = temps.to_vec();
    Field::from_fn(grid, move |z| {
        let v = &z[dx..];
        let q: f64 = v.iter().zip(&temps).map(|(vj, t)| vj * vj / t).sum();
        norm * (-0.5 * q).exp()
    })
}

/// Symmetric two-Gaussian mixture displaced by ±offset along the first
/// velocity axis: unit mass, zero momentum, diagonal second moments with
/// T₁ = σ² + offset², T_j = σ² otherwise.
pub fn gaussian_mix(grid: Grid, offset: f64, sigma2: f64) -> Field {
    let d = grid.dim_v();
    let dx = grid.dim_x();
    let norm = 0.5 * (2.0 * std::f64::consts::PI * sigma2).powf(-(d as f64) / 2.0);
    Field::from_fn(grid, move |z| {
        let v = &z[dx..];
        let mut qp = 0.0;
        let mut qm = 0.0;
        for (j, vj) in v.iter().enumerate() {
            let c = if j == 0 { offset } else { 0.0 };
            qp += (vj - c) * (vj - c);
            qm += (vj + c) * (vj + c);
        }
        norm * ((-0.5 * qp / sigma2).exp() + (-0.5 * qm / sigma2).exp())
    })
}

/// μ(v)·(1 + Π_j cos x_j), normalized to unit mass over the phase-space box.
pub fn cosine_modulated(grid: Grid) -> Field {
    let dx = grid.dim_x();
    let d = grid.dim_v();
    let norm = (2.0 * std::f64::consts::PI).powf(-(d as f64) / 2.0)
        / grid.x_period().powi(dx as i32);
    Field::from_fn(grid, move |z| {
        let (x, v) = z.split_at(dx);
        let mu = (-0.5 * norm_sq(v)).exp();
        let modulation: f64 = 1.0 + x.iter().map(|xi| xi.cos()).product::<f64>();
        norm * mu * modulation
    })
}

/// Closed-form spectrum of [`cosine_modulated`] in the crate's unitary
/// convention, evaluable at arbitrary (η, ξ). Valid for x_period = 2π.
pub fn cosine_modulated_hat(grid: Grid) -> impl Fn(&[f64], &[f64]) -> Complex64 {
    let dx = grid.dim_x();
    let d = grid.dim_v();
    // per x-axis: (2π)^{-1/2}∫₀^{2π} e^{-ixη}dx = √(2π) at η=0;
    // cos x picks up √(2π)/2 at η=±1. μ̂(ζ) = (2π)^{-d/2}·e^{-|ζ|²/2}·(2π)^{d/2}...
    let mu_norm = (2.0 * std::f64::consts::PI).powf(-(d as f64) / 2.0);
    let box_norm = (2.0 * std::f64::consts::PI).powf(-(dx as f64)); // 1/(2π)^{dx}
    let sqrt_2pi = (2.0 * std::f64::consts::PI).sqrt();
    move |eta: &[f64], zeta: &[f64]| {
        // x-factor: product over axes of √(2π)[1_{η=0} + ½·1_{|η|=1}] only
        // when *all* axes carry the same indicator structure of 1 + Πcos.
        let all_zero = eta.iter().all(|e| e.abs() < 1e-9);
        let all_one = eta.iter().all(|e| (e.abs() - 1.0).abs() < 1e-9);
        let x_factor = if all_zero {
            sqrt_2pi.powi(eta.len() as i32)
        } else if all_one {
            sqrt_2pi.powi(eta.len() as i32) * 0.5f64.powi(eta.len() as i32)
        } else {
            0.0
        };
        // v-factor: unitary transform of e^{-|v|²/2} is e^{-|ζ|²/2}
        let v_factor = (-0.5 * norm_sq(zeta)).exp();
        Complex64::new(box_norm * mu_norm * x_factor * v_factor, 0.0)
    }
}

/// Band-limited white noise over the whole grid, multiplied by a Gaussian
/// velocity envelope exp(−|v|²/(2σ²)) and scaled to unit L². Rough in every
/// direction up to the dealiasing cutoff; deterministic in `seed`.
pub fn rough_mix(grid: Grid, seed: u64, env_sigma2: f64) -> Result<Field> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = vec![0.0f64; grid.len()];
    for v in values.iter_mut() {
        // Box-Muller keeps us independent of rand_distr
        let u1: f64 = rng.gen_range(1e-12..1.0);
        let u2: f64 = rng.gen_range(0.0..1.0);
        *v = (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
    }
    let noise = Field::new(grid, values)?;
    let tr = Transform::new(grid);
    let mut spec = tr.forward(&noise);
    spec.dealias(0..grid.dims());
    let mut field = tr.inverse(&spec);

    let dx = grid.dim_x();
    let d = grid.dims();
    let mut coords = vec![0.0; d];
    for flat in 0..grid.len() {
        grid.point_coords(flat, &mut coords);
        let env = (-norm_sq(&coords[dx..]) / (2.0 * env_sigma2)).exp();
        field.values_mut()[flat] *= env;
    }
    let l2 = field.l2_norm();
    field.scale(1.0 / l2);
    Ok(field)
}

/// Velocity-only band-limited white noise with unit L², no envelope. Used as
/// "rough L² data" for multiplier-side probes (never fed to a solver).
pub fn rough_velocity(grid: Grid, seed: u64) -> Result<Field> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = vec![0.0f64; grid.len()];
    for v in values.iter_mut() {
        let u1: f64 = rng.gen_range(1e-12..1.0);
        let u2: f64 = rng.gen_range(0.0..1.0);
        *v = (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
    }
    let noise = Field::new(grid, values)?;
    let tr = Transform::new(grid);
    let mut spec = tr.forward(&noise);
    spec.dealias(0..grid.dims());
    let mut field = tr.inverse(&spec);
    let l2 = field.l2_norm();
    field.scale(1.0 / l2);
    Ok(field)
}
