//! Discretized phase-space geometry and its dual frequency lattice.
//!
//! Velocity axes discretize the periodized box [−L, L)^d, so their dual
//! lattice is {πk/L : k = −n/2 … n/2−1}. Spatial axes live on a torus of
//! period `x_period` (default 2π) with dual lattice {2πk/x_period}.

use crate::error::{CoreError, Result};

/// What an axis parameterizes; determines its coordinates and frequencies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AxisKind {
    /// Torus coordinate in [0, period).
    Spatial { period: f64 },
    /// Periodized velocity coordinate in [−L, L).
    Velocity { half_width: f64 },
}

/// Velocity/phase-space grid: `dim_x` spatial axes followed by `dim_v`
/// velocity axes, all with `n` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    dim_v: usize,
    dim_x: usize,
    n: usize,
    half_width_v: f64,
    x_period: f64,
}

impl Grid {
    /// Velocity-only grid (homogeneous problems).
    pub fn velocity(dim_v: usize, n: usize, half_width_v: f64) -> Result<Self> {
        Self::new(dim_v, 0, n, half_width_v, 2.0 * std::f64::consts::PI)
    }

    /// Phase-space grid with `dim_x` spatial axes of period `x_period`.
    pub fn phase_space(
        dim_v: usize,
        dim_x: usize,
        n: usize,
        half_width_v: f64,
        x_period: f64,
    ) -> Result<Self> {
        Self::new(dim_v, dim_x, n, half_width_v, x_period)
    }

    fn new(dim_v: usize, dim_x: usize, n: usize, half_width_v: f64, x_period: f64) -> Result<Self> {
        if dim_v < 1 {
            return Err(CoreError::Configuration(
                "grid needs at least one velocity axis".into(),
            ));
        }
        if n < 4 || !n.is_power_of_two() {
            return Err(CoreError::Configuration(format!(
                "n_per_axis must be a power of two >= 4, got {n}"
            )));
        }
        if half_width_v <= 0.0 || x_period <= 0.0 {
            return Err(CoreError::Configuration(
                "domain sizes must be positive".into(),
            ));
        }
        Ok(Grid {
            dim_v,
            dim_x,
            n,
            half_width_v,
            x_period,
        })
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    /// Total number of axes.
    pub fn dims(&self) -> usize {
        self.dim_v + self.dim_x
    }

    pub fn n_per_axis(&self) -> usize {
        self.n
    }

    pub fn half_width_v(&self) -> f64 {
        self.half_width_v
    }

    pub fn x_period(&self) -> f64 {
        self.x_period
    }

    /// Total point count n^(dim_v + dim_x).
    pub fn len(&self) -> usize {
        self.n.pow(self.dims() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn axis_kind(&self, axis: usize) -> AxisKind {
        if axis < self.dim_x {
            AxisKind::Spatial {
                period: self.x_period,
            }
        } else {
            AxisKind::Velocity {
                half_width: self.half_width_v,
            }
        }
    }

    /// Physical grid spacing along `axis`.
    pub fn spacing(&self, axis: usize) -> f64 {
        match self.axis_kind(axis) {
            AxisKind::Spatial { period } => period / self.n as f64,
            AxisKind::Velocity { half_width } => 2.0 * half_width / self.n as f64,
        }
    }

    /// Frequency lattice spacing along `axis`.
    pub fn freq_spacing(&self, axis: usize) -> f64 {
        match self.axis_kind(axis) {
            AxisKind::Spatial { period } => 2.0 * std::f64::consts::PI / period,
            AxisKind::Velocity { half_width } => std::f64::consts::PI / half_width,
        }
    }

    /// Signed mode number for storage index `m` (FFT order).
    pub fn mode_k(&self, m: usize) -> i64 {
        if m <= self.n / 2 - 1 {
            m as i64
        } else {
            m as i64 - self.n as i64
        }
    }

    /// Frequency at storage index `m` along `axis`.
    pub fn freq(&self, axis: usize, m: usize) -> f64 {
        self.mode_k(m) as f64 * self.freq_spacing(axis)
    }

    /// Physical coordinate at index `j` along `axis`.
    pub fn coord(&self, axis: usize, j: usize) -> f64 {
        match self.axis_kind(axis) {
            AxisKind::Spatial { .. } => j as f64 * self.spacing(axis),
            AxisKind::Velocity { half_width } => -half_width + j as f64 * self.spacing(axis),
        }
    }

    /// Quadrature weight of one physical grid point (rectangle rule).
    pub fn cell_volume(&self) -> f64 {
        (0..self.dims()).map(|a| self.spacing(a)).product()
    }

    /// ℓ² weight of one frequency lattice point (so Parseval holds).
    pub fn dual_cell_volume(&self) -> f64 {
        (0..self.dims()).map(|a| self.freq_spacing(a)).product()
    }

    /// Row-major strides.
    pub fn strides(&self) -> Vec<usize> {
        let d = self.dims();
        let mut s = vec![1usize; d];
        for a in (0..d.saturating_sub(1)).rev() {
            s[a] = s[a + 1] * self.n;
        }
        s
    }

    /// Decompose a flat index into per-axis indices (row-major).
    pub fn unravel(&self, flat: usize, out: &mut [usize]) {
        let d = self.dims();
        let mut rem = flat;
        for a in (0..d).rev() {
            out[a] = rem % self.n;
            rem /= self.n;
        }
    }

    /// Frequencies of the mode with flat index `flat`; `out.len() == dims()`.
    pub fn mode_freqs(&self, flat: usize, out: &mut [f64]) {
        let d = self.dims();
        let mut rem = flat;
        for a in (0..d).rev() {
            out[a] = self.freq(a, rem % self.n);
            rem /= self.n;
        }
    }

    /// Physical coordinates of the point with flat index `flat`.
    pub fn point_coords(&self, flat: usize, out: &mut [f64]) {
        let d = self.dims();
        let mut rem = flat;
        for a in (0..d).rev() {
            out[a] = self.coord(a, rem % self.n);
            rem /= self.n;
        }
    }

    /// Largest kept signed mode under the 2/3 dealiasing rule.
    pub fn dealias_k_max(&self) -> i64 {
        (self.n as i64) / 3
    }

    /// Largest kept velocity frequency magnitude under the 2/3 rule.
    pub fn dealias_xi_max(&self) -> f64 {
        self.dealias_k_max() as f64 * std::f64::consts::PI / self.half_width_v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn velocity_lattice_matches_definition() {
        let g = Grid::velocity(1, 8, 2.0).unwrap();
        // {πk/L : k = −n/2 … n/2−1} in FFT storage order
        let freqs: Vec<f64> = (0..8).map(|m| g.freq(0, m)).collect();
        let pi = std::f64::consts::PI;
        let expect = [0.0, 0.5, 1.0, 1.5, -2.0, -1.5, -1.0, -0.5].map(|k| k * pi);
        for (a, b) in freqs.iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn spatial_lattice_is_integers_for_2pi_period() {
        let g = Grid::phase_space(1, 1, 8, 3.0, 2.0 * std::f64::consts::PI).unwrap();
        assert!((g.freq(0, 1) - 1.0).abs() < 1e-15);
        assert!((g.freq(0, 7) + 1.0).abs() < 1e-15);
        // axis 1 is the velocity axis
        assert!((g.freq(1, 1) - std::f64::consts::PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_power_of_two() {
        assert!(Grid::velocity(1, 12, 2.0).is_err());
    }

    #[test]
    fn unravel_roundtrip() {
        let g = Grid::phase_space(1, 1, 8, 3.0, 1.0).unwrap();
        let strides = g.strides();
        let mut idx = [0usize; 2];
        for flat in 0..g.len() {
            g.unravel(flat, &mut idx);
            let back: usize = idx.iter().zip(&strides).map(|(i, s)| i * s).sum();
            assert_eq!(back, flat);
        }
    }
}
