//! Gevrey/analyticity classification of spectral decay.
//!
//! A field is Gevrey-s when its spectrum decays like e^{−c|ξ|^{1/s}}; fitting
//! log shell-maxima against |ξ|^{1/s} for candidate s and keeping the best
//! linear fit recovers both the class s and the radius coefficient c.
//! Shell maxima (not means) are used: membership is a sup-type criterion and
//! maxima are robust to anisotropy.

use crate::error::{CoreError, Result};
use crate::spectral::SpectralField;
use serde::{Deserialize, Serialize};

/// Relative noise floor below which shells are ignored.
pub const NOISE_FLOOR_REL: f64 = 1e-13;
/// A classification is reported only when the best fit reaches this r².
pub const R2_THRESHOLD: f64 = 0.98;
const MIN_SHELLS: usize = 8;

/// Which x-frequency columns contribute to velocity shells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaFilter {
    /// Every mode.
    All,
    /// Only η ≠ 0 columns (the spatially inhomogeneous content).
    NonZero,
    /// Only the η = 0 column (the spatial average).
    Zero,
}

/// Radial shell maxima of |coeffs| over the velocity frequency lattice.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShellSpectrum {
    pub radii: Vec<f64>,
    pub max_abs: Vec<f64>,
}

/// Bin |ξ| into shells of width π/L and record the max modulus per shell.
/// Shells beyond the per-axis maximum (incomplete corner shells) are dropped.
pub fn velocity_shells(spec: &SpectralField, filter: EtaFilter) -> ShellSpectrum {
    let grid = spec.grid();
    let d = grid.dims();
    let dx = grid.dim_x();
    let step = grid.freq_spacing(dx); // velocity axes all share one spacing
    let axis_max = (grid.n_per_axis() as f64 / 2.0 - 1.0) * step;
    let n_shells = (axis_max / step).round() as usize + 1;

    let mut maxima = vec![0.0f64; n_shells];
    let mut freqs = vec![0.0; d];
    for (flat, c) in spec.coeffs().iter().enumerate() {
        grid.mode_freqs(flat, &mut freqs);
        let (eta, xi) = freqs.split_at(dx);
        let eta_zero = eta.iter().all(|e| *e == 0.0);
        match filter {
            EtaFilter::All => {}
            EtaFilter::NonZero => {
                if eta_zero {
                    continue;
                }
            }
            EtaFilter::Zero => {
                if !eta_zero {
                    continue;
                }
            }
        }
        let r = xi.iter().map(|x| x * x).sum::<f64>().sqrt();
        let shell = (r / step).round() as usize;
        if shell < n_shells {
            let a = c.norm();
            if a > maxima[shell] {
                maxima[shell] = a;
            }
        }
    }
    ShellSpectrum {
        radii: (0..n_shells).map(|i| i as f64 * step).collect(),
        max_abs: maxima,
    }
}

/// Result of fitting e^{−c|ξ|^{1/s}} to shell maxima.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GevreyFit {
    /// Gevrey index (1/2 ultra-analytic, 1 analytic, > 1 Gevrey).
    pub s: f64,
    /// Radius coefficient in e^{−c|ξ|^{1/s}}.
    pub c: f64,
    pub r_squared: f64,
    /// Shell radius range actually used.
    pub window: (f64, f64),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum GevreyClassification {
    Classified(GevreyFit),
    /// No candidate reached the r² threshold; carries the best fit anyway.
    Unclassifiable { best: GevreyFit },
}

impl GevreyClassification {
    pub fn fit(&self) -> &GevreyFit {
        match self {
            GevreyClassification::Classified(f) => f,
            GevreyClassification::Unclassifiable { best } => best,
        }
    }

    pub fn is_classified(&self) -> bool {
        matches!(self, GevreyClassification::Classified(_))
    }
}

/// Fit candidate Gevrey indices against the shell maxima of `spec`.
pub fn gevrey_fit(spec: &SpectralField, s_candidates: &[f64]) -> Result<GevreyClassification> {
    fit_shells(&velocity_shells(spec, EtaFilter::All), s_candidates)
}

/// The fit itself, reusable with externally constructed shells.
pub fn fit_shells(
    shells: &ShellSpectrum,
    s_candidates: &[f64],
) -> Result<GevreyClassification> {
    let global_max = shells.max_abs.iter().cloned().fold(0.0f64, f64::max);
    if global_max <= 0.0 {
        return Err(CoreError::Numerical("all shells empty".into()));
    }
    let floor = NOISE_FLOOR_REL * global_max;
    // exclude the top 1/3 of the shell range (dealiasing band)
    let r_cut = shells.radii.last().copied().unwrap_or(0.0) * (2.0 / 3.0);

    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut rs = Vec::new();
    for (r, a) in shells.radii.iter().zip(&shells.max_abs) {
        if *a > floor && *r <= r_cut {
            rs.push(*r);
            ys.push(a.ln());
            xs.push(*r);
        }
    }
    if rs.len() < MIN_SHELLS {
        return Err(CoreError::Configuration(format!(
            "gevrey fit needs at least {MIN_SHELLS} usable shells, found {}",
            rs.len()
        )));
    }
    let window = (rs[0], *rs.last().unwrap());

    let mut best: Option<GevreyFit> = None;
    for &s in s_candidates {
        let xpow: Vec<f64> = rs.iter().map(|r| r.powf(1.0 / s)).collect();
        let (slope, _icept, r2) = linear_fit(&xpow, &ys);
        let c = -slope;
        if c <= 0.0 {
            continue;
        }
        let fit = GevreyFit {
            s,
            c,
            r_squared: r2,
            window,
        };
        if best.as_ref().map_or(true, |b| r2 > b.r_squared) {
            best = Some(fit);
        }
    }
    let best = best.ok_or_else(|| {
        CoreError::Numerical("no Gevrey candidate produced a decaying fit".into())
    })?;
    if best.r_squared >= R2_THRESHOLD {
        Ok(GevreyClassification::Classified(best))
    } else {
        Ok(GevreyClassification::Unclassifiable { best })
    }
}

/// Least squares y = a + b·x; returns (b, a, r²).
fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|xi| (xi - mx) * (xi - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(xi, yi)| (xi - mx) * (yi - my)).sum();
    let syy: f64 = y.iter().map(|yi| (yi - my) * (yi - my)).sum();
    if sxx == 0.0 || syy == 0.0 {
        return (0.0, my, 0.0);
    }
    let b = sxy / sxx;
    let ss_res: f64 = x
        .iter()
        .zip(y)
        .map(|(xi, yi)| {
            let pred = my + b * (xi - mx);
            (yi - pred) * (yi - pred)
        })
        .sum();
    (b, my - b * mx, 1.0 - ss_res / syy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::Grid;
    use num_complex::Complex64;

    fn synthetic(s: f64, c: f64, n: usize) -> SpectralField {
        let grid = Grid::velocity(1, n, 12.0).unwrap();
        SpectralField::from_fn(grid, |freqs| {
            let r = freqs[0].abs();
            Complex64::new((-c * r.powf(1.0 / s)).exp(), 0.0)
        })
    }

    #[test]
    fn recovers_parameters_on_synthetic_data() {
        for &(s, c) in &[(0.5, 0.3), (1.0, 0.5), (2.0, 1.1)] {
            let spec = synthetic(s, c, 128);
            let class = gevrey_fit(&spec, &[0.5, 1.0, 2.0]).unwrap();
            assert!(class.is_classified(), "s={s} c={c}");
            let fit = class.fit();
            assert_eq!(fit.s, s);
            assert!(
                (fit.c - c).abs() <= 0.02 * c,
                "s={s}: fitted c={} want {c}",
                fit.c
            );
        }
    }

    #[test]
    fn scale_equivariance() {
        let spec = synthetic(1.0, 0.4, 128);
        let mut scaled = spec.clone();
        for v in scaled.coeffs_mut() {
            *v *= 07.25;
        }
        let a = gevrey_fit(&spec, &[0.5, 1.0, 2.0]).unwrap();
        let b = gevrey_fit(&scaled, &[0.5, 1.0, 2.0]).unwrap();
        assert_eq!(a.fit().s, b.fit().s);
        assert!((a.fit().c - b.fit().c).abs() < 1e-12);
    }

    #[test]
    fn too_few_shells_is_an_error() {
        let spec = synthetic(1.0, 0.4, 8);
        assert!(gevrey_fit(&spec, &[1.0]).is_err());
    }
}
