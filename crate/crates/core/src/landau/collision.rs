//! Pseudo-spectral evaluation of Q(f,f) = ∇_v·(ā(f)·∇_v f − b̄(f) f).
//!
//! Gradients and the final divergence are spectral; the coefficient products
//! happen pointwise in physical space with a 2/3-rule mask after each
//! product (the coefficients are quadratic polynomials, so products triple
//! bandwidth). The divergence form makes the mass moment of the result
//! vanish identically.

use super::coefficients::LandauCoefficients;
use crate::spectral::{Field, SpectralField, Transform};
use num_complex::Complex64;

pub struct LandauOperator {
    tr: Transform,
}

impl LandauOperator {
    pub fn new(grid: crate::spectral::Grid) -> Self {
        LandauOperator {
            tr: Transform::new(grid),
        }
    }

    pub fn grid(&self) -> crate::spectral::Grid {
        self.tr.grid()
    }

    /// Collision right-hand side at the current state.
    pub fn collision_rhs(&self, f: &Field, c: &LandauCoefficients) -> Field {
        let grid = self.tr.grid();
        let d = grid.dim_v();
        let n_total = grid.len();

        let mut spec = self.tr.forward(f);
        spec.dealias(0..d);

        // ∂_j f in physical space, from the masked spectrum
        let mut grads: Vec<Vec<Complex64>> = Vec::with_capacity(d);
        let mut freqs = vec![0.0; d];
        for j in 0..d {
            let mut g: Vec<Complex64> = spec
                .coeffs()
                .iter()
                .enumerate()
                .map(|(flat, cf)| {
                    grid.mode_freqs(flat, &mut freqs);
                    Complex64::new(0.0, freqs[j]) * cf
                })
                .collect();
            self.tr.inverse_axes(&mut g, 0..d);
            grads.push(g);
        }
        // filtered field for the drift product
        let mut filtered = spec.coeffs().to_vec();
        self.tr.inverse_axes(&mut filtered, 0..d);

        // flux_j = Σ_k ā_{jk} ∂_k f − b̄_j f, pointwise
        let mut coords = vec![0.0; d];
        let mut fluxes: Vec<Vec<Complex64>> = vec![vec![Complex64::default(); n_total]; d];
        for flat in 0..n_total {
            grid.point_coords(flat, &mut coords);
            for j in 0..d {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, g) in grads.iter().enumerate() {
                    acc += c.abar(&coords, j, k) * g[flat];
                }
                acc -= c.bbar(&coords, j) * filtered[flat];
                fluxes[j][flat] = acc;
            }
        }

        // divergence: Σ_j iξ_j flux̂_j, masked, back to physical space
        let mut div_hat = vec![Complex64::default(); n_total];
        for (j, flux) in fluxes.iter_mut().enumerate() {
            self.tr.forward_axes(flux, 0..d);
            crate::spectral::field::dealias_axes(flux, &grid, 0..d);
            for (flat, v) in flux.iter().enumerate() {
                grid.mode_freqs(flat, &mut freqs);
                div_hat[flat] += Complex64::new(0.0, freqs[j]) * v;
            }
        }
        self.tr.inverse_axes(&mut div_hat, 0..d);
        let values: Vec<f64> = div_hat.iter().map(|z| z.re).collect();
        Field::new(grid, values).expect("rhs on same grid")
    }

    pub fn forward(&self, f: &Field) -> SpectralField {
        self.tr.forward(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::landau::coefficients::coefficients_from_state;
    use crate::presets;
    use crate::spectral::{moments, Grid};

    #[test]
    fn maxwellian_is_equilibrium() {
        // self-consistent Maxwellian (variance T₀/d per axis): ā∇f = b̄f exactly
        let grid = Grid::velocity(2, 64, 12.0).unwrap();
        let f = presets::maxwellian(grid, 1.0);
        let c = coefficients_from_state(&f).unwrap();
        let op = LandauOperator::new(grid);
        let rhs = op.collision_rhs(&f, &c);
        assert!(
            rhs.l2_norm() < 1e-8,
            "equilibrium residual {}",
            rhs.l2_norm()
        );
    }

    #[test]
    fn collision_conserves_mass_momentum_energy() {
        let grid = Grid::velocity(2, 64, 12.0).unwrap();
        let f = presets::gaussian_mix(grid, 0.5, 0.5);
        let c = coefficients_from_state(&f).unwrap();
        let op = LandauOperator::new(grid);
        let rhs = op.collision_rhs(&f, &c);

        let grid_d = grid;
        let vol = grid_d.cell_volume();
        let mut coords = vec![0.0; 2];
        let (mut mass, mut mom1, mut mom2, mut energy) = (0.0, 0.0, 0.0, 0.0);
        for (flat, &v) in rhs.values().iter().enumerate() {
            grid_d.point_coords(flat, &mut coords);
            mass += v;
            mom1 += v * coords[0];
            mom2 += v * coords[1];
            energy += v * (coords[0] * coords[0] + coords[1] * coords[1]);
        }
        mass *= vol;
        mom1 *= vol;
        mom2 *= vol;
        energy *= vol;
        assert!(mass.abs() < 1e-10, "mass moment {mass}");
        assert!(mom1.abs() < 1e-8 && mom2.abs() < 1e-8, "momentum {mom1} {mom2}");
        assert!(energy.abs() < 1e-8, "energy moment {energy}");
    }

    #[test]
    fn anisotropic_gaussian_relaxes_toward_isotropy() {
        // d/dt T_j = 4T₀ − 4dT_j (moment identity integrated by parts from
        // the polynomial coefficients): the quadrature of v_j²·Q(f,f) must
        // match it for Gaussian data
        let grid = Grid::velocity(2, 64, 12.0).unwrap();
        let f = presets::aniso_gaussian(grid, &[1.5, 0.5]);
        let m0 = moments(&f).unwrap();
        let c = coefficients_from_state(&f).unwrap();
        let op = LandauOperator::new(grid);
        let rhs = op.collision_rhs(&f, &c);

        let vol = grid.cell_volume();
        let mut coords = vec![0.0; 2];
        let mut dt1 = 0.0;
        for (flat, &v) in rhs.values().iter().enumerate() {
            grid.point_coords(flat, &mut coords);
            dt1 += v * coords[0] * coords[0];
        }
        dt1 *= vol;
        let expect = 4.0 * m0.energy_t0 - 8.0 * m0.directional_t[0];
        assert!(
            (dt1 - expect).abs() < 1e-6 * expect.abs(),
            "dT₁/dt = {dt1}, moment identity gives {expect}"
        );
    }
}
