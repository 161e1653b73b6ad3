//! Maxwellian-molecule Landau coefficients as exact polynomials of v.
//!
//! Under unit mass, zero momentum and diagonal second moments the convolved
//! diffusion matrix is ā_{jk}(v) = δ_{jk}(|v|² + T₀ − T_j) − v_j v_k. The
//! drift is taken from its defining convolution b̄_j = Σ_i(∂_{v_i}a_{ij})⋆f,
//! which gives (1−d)·v_j; that choice makes the self-consistent Maxwellian an
//! exact equilibrium in every dimension (at d = 2 it coincides with −v_j).

use crate::error::{CoreError, Result};
use crate::spectral::{moments, Field, MomentSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LandauCoefficients {
    pub energy_t0: f64,
    pub directional_t: Vec<f64>,
    /// Ellipticity constant min_j (T₀ − T_j).
    pub c1: f64,
}

impl LandauCoefficients {
    pub fn from_moments(m: &MomentSet) -> Result<Self> {
        if m.c1 <= 0.0 {
            return Err(CoreError::DegenerateTemperature {
                c1: m.c1,
                temps: m.directional_t.clone(),
            });
        }
        Ok(LandauCoefficients {
            energy_t0: m.energy_t0,
            directional_t: m.directional_t.clone(),
            c1: m.c1,
        })
    }

    pub fn dim(&self) -> usize {
        self.directional_t.len()
    }

    /// ā_{jk}(v) = δ_{jk}(|v|² + T₀ − T_j) − v_j v_k.
    pub fn abar(&self, v: &[f64], j: usize, k: usize) -> f64 {
        let mut a = -v[j] * v[k];
        if j == k {
            let vsq: f64 = v.iter().map(|x| x * x).sum();
            a += vsq + self.energy_t0 - self.directional_t[j];
        }
        a
    }

    /// b̄_j(v) = (1−d)·v_j (convolution definition; −v_j at d = 2).
    pub fn bbar(&self, v: &[f64], j: usize) -> f64 {
        (1.0 - self.dim() as f64) * v[j]
    }

    /// Upper bound on the largest eigenvalue of ā over |v|² ≤ vsq_max,
    /// used by the explicit-diffusion stability rule.
    pub fn lambda_max(&self, vsq_max: f64) -> f64 {
        let t_min = self
            .directional_t
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        vsq_max + self.energy_t0 - t_min
    }
}

/// Coefficients of the current state; requires unit-mass, zero-momentum f
/// (up to numerical drift) and positive ellipticity constant.
pub fn coefficients_from_state(f: &Field) -> Result<LandauCoefficients> {
    LandauCoefficients::from_moments(&moments(f)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::spectral::Grid;

    #[test]
    fn isotropic_gaussian_matches_formula() {
        // variance 1 per axis, d = 2 → ā_{jk}(v) = δ_{jk}(|v|²+1) − v_j v_k, C1 = 1
        let grid = Grid::velocity(2, 128, 12.0).unwrap();
        let f = presets::maxwellian(grid, 1.0);
        let c = coefficients_from_state(&f).unwrap();
        assert!((c.energy_t0 - 2.0).abs() < 1e-10);
        assert!((c.c1 - 1.0).abs() < 1e-10);
        let v = [0.7, -1.2];
        let vsq = v[0] * v[0] + v[1] * v[1];
        assert!((c.abar(&v, 0, 0) - (vsq + 1.0 - v[0] * v[0])).abs() < 1e-9);
        assert!((c.abar(&v, 0, 1) - (-v[0] * v[1])).abs() < 1e-9);
        assert!((c.bbar(&v, 1) - (-v[1])).abs() < 1e-12);
    }

    #[test]
    fn origin_value_is_temperature_gap() {
        let grid = Grid::velocity(2, 64, 12.0).unwrap();
        let f = presets::aniso_gaussian(grid, &[1.5, 0.5]);
        let c = coefficients_from_state(&f).unwrap();
        // ā_{jj}(0) = T₀ − T_j
        let zero = [0.0, 0.0];
        assert!((c.abar(&zero, 0, 0) - 0.5).abs() < 1e-9);
        assert!((c.abar(&zero, 1, 1) - 1.5).abs() < 1e-9);
        assert!((c.c1 - 0.5).abs() < 1e-9);
    }

    #[test]
    fn ellipticity_on_random_samples() {
        use rand::{Rng, SeedableRng};
        let grid = Grid::velocity(2, 64, 12.0).unwrap();
        let f = presets::aniso_gaussian(grid, &[1.3, 0.7]);
        let c = coefficients_from_state(&f).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10_000 {
            let v = [rng.gen_range(-12.0..12.0), rng.gen_range(-12.0..12.0)];
            let xi = [rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)];
            let mut quad = 0.0;
            for j in 0..2 {
                for k in 0..2 {
                    quad += c.abar(&v, j, k) * xi[j] * xi[k];
                }
            }
            let nsq = xi[0] * xi[0] + xi[1] * xi[1];
            assert!(
                quad >= c.c1 * nsq - 1e-9,
                "ellipticity violated at v={v:?}, xi={xi:?}: {quad} < {}",
                c.c1 * nsq
            );
            // symmetry
            assert_eq!(c.abar(&v, 0, 1), c.abar(&v, 1, 0));
        }
    }

    #[test]
    fn degenerate_temperature_is_rejected() {
        // all mass on the v₁ axis → T₂ ≈ 0 → C1 ≈ 0
        let grid = Grid::velocity(2, 64, 12.0).unwrap();
        let f = Field::from_fn(grid, |v| {
            (-0.5 * (v[0] * v[0] + v[1] * v[1] / 1e-30)).exp() + 1e-300
        });
        assert!(matches!(
            coefficients_from_state(&f),
            Err(CoreError::DegenerateTemperature { .. })
        ));
    }
}
