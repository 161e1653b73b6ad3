//! Real-space sample arrays, their Fourier coefficients, and the unitary
//! transform contract between them.

use super::fft::{Direction, FftEngine};
use super::grid::Grid;
use crate::error::{CoreError, Result};
use num_complex::Complex64;
use std::ops::Range;

/// Real-valued samples over the physical points of a [`Grid`].
#[derive(Debug, Clone)]
pub struct Field {
    grid: Grid,
    values: Vec<f64>,
}

impl Field {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(CoreError::DimensionMismatch {
                expected: grid.len(),
                got: values.len(),
            });
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(CoreError::Numerical(format!(
                "field contains non-finite value {v}"
            )));
        }
        Ok(Field { grid, values })
    }

    /// Sample a function of the physical coordinates.
    pub fn from_fn(grid: Grid, f: impl Fn(&[f64]) -> f64) -> Self {
        let d = grid.dims();
        let mut coords = vec![0.0; d];
        let values = (0..grid.len())
            .map(|flat| {
                grid.point_coords(flat, &mut coords);
                f(&coords)
            })
            .collect();
        Field { grid, values }
    }

    pub fn zeros(grid: Grid) -> Self {
        Field {
            grid,
            values: vec![0.0; grid.len()],
        }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Rectangle-rule L² norm.
    pub fn l2_norm(&self) -> f64 {
        let w = self.grid.cell_volume();
        (self.values.iter().map(|v| v * v).sum::<f64>() * w).sqrt()
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn scale(&mut self, s: f64) {
        for v in &mut self.values {
            *v *= s;
        }
    }
}

/// Complex Fourier coefficients over the dual lattice of a [`Grid`].
#[derive(Debug, Clone)]
pub struct SpectralField {
    grid: Grid,
    coeffs: Vec<Complex64>,
}

impl SpectralField {
    pub fn new(grid: Grid, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != grid.len() {
            return Err(CoreError::DimensionMismatch {
                expected: grid.len(),
                got: coeffs.len(),
            });
        }
        Ok(SpectralField { grid, coeffs })
    }

    /// Sample a function of the lattice frequencies.
    pub fn from_fn(grid: Grid, f: impl Fn(&[f64]) -> Complex64) -> Self {
        let d = grid.dims();
        let mut freqs = vec![0.0; d];
        let coeffs = (0..grid.len())
            .map(|flat| {
                grid.mode_freqs(flat, &mut freqs);
                f(&freqs)
            })
            .collect();
        SpectralField { grid, coeffs }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    /// ℓ² norm with frequency-cell weights; equals the L² norm of the
    /// physical field by Parseval.
    pub fn l2_norm(&self) -> f64 {
        let w = self.grid.dual_cell_volume();
        (self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>() * w).sqrt()
    }

    /// Largest violation of coeffs(−k) = conj(coeffs(k)), relative to the
    /// largest coefficient. Zero (to roundoff) for transforms of real fields.
    pub fn conjugate_symmetry_defect(&self) -> f64 {
        let n = self.grid.n_per_axis();
        let d = self.grid.dims();
        let strides = self.grid.strides();
        let mut idx = vec![0usize; d];
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        for flat in 0..self.coeffs.len() {
            self.grid.unravel(flat, &mut idx);
            let neg: usize = idx
                .iter()
                .zip(&strides)
                .map(|(&i, s)| ((n - i) % n) * s)
                .sum();
            let defect = (self.coeffs[neg] - self.coeffs[flat].conj()).norm();
            worst = worst.max(defect);
            scale = scale.max(self.coeffs[flat].norm());
        }
        if scale > 0.0 {
            worst / scale
        } else {
            0.0
        }
    }

    /// Zero every mode whose signed index exceeds n/3 on any of `axes`
    /// (the 2/3 dealiasing rule).
    pub fn dealias(&mut self, axes: Range<usize>) {
        dealias_axes(&mut self.coeffs, &self.grid, axes);
    }
}

pub(crate) fn dealias_axes(coeffs: &mut [Complex64], grid: &Grid, axes: Range<usize>) {
    let n = grid.n_per_axis();
    let kmax = grid.dealias_k_max();
    let d = grid.dims();
    let mut idx = vec![0usize; d];
    for (flat, c) in coeffs.iter_mut().enumerate() {
        let mut rem = flat;
        for a in (0..d).rev() {
            idx[a] = rem % n;
            rem /= n;
        }
        for a in axes.clone() {
            let k = if idx[a] <= n / 2 - 1 {
                idx[a] as i64
            } else {
                idx[a] as i64 - n as i64
            };
            if k.abs() > kmax {
                *c = Complex64::new(0.0, 0.0);
                break;
            }
        }
    }
}

/// Grid-aware DFT with cached plans. All axes share one line length, so one
/// plan pair serves every axis pass.
pub struct Transform {
    grid: Grid,
    engine: FftEngine,
}

impl Transform {
    pub fn new(grid: Grid) -> Self {
        Transform {
            grid,
            engine: FftEngine::new(grid.n_per_axis()),
        }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    fn alpha(&self, axis: usize) -> f64 {
        self.grid.spacing(axis) / (2.0 * std::f64::consts::PI).sqrt()
    }

    fn alternate(&self, axis: usize) -> bool {
        // velocity axes have origin −L, giving the (−1)^k phase
        axis >= self.grid.dim_x()
    }

    /// Forward passes along `axes` of a complex hypercube (in place).
    pub fn forward_axes(&self, data: &mut [Complex64], axes: Range<usize>) {
        for a in axes {
            self.engine.transform_axis(
                data,
                self.grid.dims(),
                a,
                Direction::Forward,
                self.alpha(a),
                self.alternate(a),
            );
        }
    }

    /// Inverse passes along `axes` of a complex hypercube (in place).
    pub fn inverse_axes(&self, data: &mut [Complex64], axes: Range<usize>) {
        for a in axes {
            self.engine.transform_axis(
                data,
                self.grid.dims(),
                a,
                Direction::Inverse,
                self.alpha(a),
                self.alternate(a),
            );
        }
    }

    pub fn forward(&self, f: &Field) -> SpectralField {
        let mut data: Vec<Complex64> = f
            .values()
            .iter()
            .map(|&v| Complex64::new(v, 0.0))
            .collect();
        self.forward_axes(&mut data, 0..self.grid.dims());
        SpectralField {
            grid: self.grid,
            coeffs: data,
        }
    }

    /// Inverse transform, discarding the O(roundoff) imaginary part.
    pub fn inverse(&self, spec: &SpectralField) -> Field {
        let mut data = spec.coeffs.clone();
        self.inverse_axes(&mut data, 0..self.grid.dims());
        Field {
            grid: self.grid,
            values: data.iter().map(|c| c.re).collect(),
        }
    }
}

/// Unitary-convention DFT of a real field; Parseval holds against
/// [`Field::l2_norm`] and `inverse_transform` undoes it exactly.
pub fn forward_transform(f: &Field) -> SpectralField {
    Transform::new(f.grid()).forward(f)
}

pub fn inverse_transform(spec: &SpectralField) -> Field {
    Transform::new(spec.grid()).inverse(spec)
}

/// Multiply coefficients pointwise by the real symbol `m(freqs)`.
///
/// A NaN/∞ symbol value aborts with [`CoreError::MultiplierOverflow`]; that
/// is the signal to use a δ-regularized weight or log-space evaluation.
pub fn apply_multiplier(
    spec: &SpectralField,
    m: impl Fn(&[f64]) -> f64,
) -> Result<SpectralField> {
    let grid = spec.grid();
    let d = grid.dims();
    let mut freqs = vec![0.0; d];
    let mut coeffs = spec.coeffs().to_vec();
    for (flat, c) in coeffs.iter_mut().enumerate() {
        grid.mode_freqs(flat, &mut freqs);
        let mv = m(&freqs);
        if !mv.is_finite() {
            return Err(CoreError::MultiplierOverflow {
                frequency: freqs.clone(),
                value: mv,
            });
        }
        *c *= mv;
    }
    SpectralField::new(grid, coeffs)
}

/// ℓ²-with-quadrature-weights norm of m·coeffs.
pub fn weighted_norm(spec: &SpectralField, m: impl Fn(&[f64]) -> f64) -> Result<f64> {
    let grid = spec.grid();
    let d = grid.dims();
    let mut freqs = vec![0.0; d];
    let w = grid.dual_cell_volume();
    let mut acc = 0.0f64;
    for (flat, c) in spec.coeffs().iter().enumerate() {
        grid.mode_freqs(flat, &mut freqs);
        let mv = m(&freqs);
        if !mv.is_finite() {
            return Err(CoreError::MultiplierOverflow {
                frequency: freqs.clone(),
                value: mv,
            });
        }
        acc += mv * mv * c.norm_sqr();
    }
    Ok((acc * w).sqrt())
}

/// Natural log of the weighted norm, with the weight given in log space.
/// Never overflows; returns −∞ for an identically zero field.
pub fn log_weighted_norm(spec: &SpectralField, log_m: impl Fn(&[f64]) -> f64) -> f64 {
    let grid = spec.grid();
    let d = grid.dims();
    let mut freqs = vec![0.0; d];

    // two passes: locate the max log-term, then sum shifted exponentials
    let mut terms: Vec<f64> = Vec::with_capacity(spec.coeffs().len());
    let mut max_term = f64::NEG_INFINITY;
    for (flat, c) in spec.coeffs().iter().enumerate() {
        let a = c.norm();
        if a == 0.0 {
            terms.push(f64::NEG_INFINITY);
            continue;
        }
        grid.mode_freqs(flat, &mut freqs);
        let t = log_m(&freqs) + a.ln();
        terms.push(t);
        if t > max_term {
            max_term = t;
        }
    }
    if max_term == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let sum: f64 = terms
        .iter()
        .filter(|t| t.is_finite())
        .map(|t| (2.0 * (t - max_term)).exp())
        .sum();
    max_term + 0.5 * (sum.ln() + grid.dual_cell_volume().ln())
}
