//! Time-growing exponential Fourier weights and their δ-regularized
//! multiplier forms.
//!
//! Three families appear, one per equation:
//!
//! * velocity-Gaussian  G_δ(t,|ξ|) = e^{c₀t|ξ|²} / [(1+δe^{c₀t|ξ|²})(1+δc₀t|ξ|²)^N],
//! * phase-Gaussian     G_δ(t,η,ξ) = e^{φ} / [(1+δe^{φ})(1+δ(|η|²+|ξ|²))^N]
//!   with φ(t,η,ξ) = c₀(∫₀ᵗ|ξ−sη|²ds − (c₂/2)t³|η|²),
//! * phase-analytic     F_δ(t,η,ξ) = e^{Ψ} / [(1+δe^{Ψ})(1+δΨ)^N]
//!   with Ψ(t,η,ξ) = c₀∫₀ᵗ|ξ−sη|ds.
//!
//! Weights are always evaluated in log space so that "finite unless genuinely
//! divergent" is meaningful on grids; the plain-value accessors exist for the
//! bounded δ > 0 forms (all are ≤ 1/δ).

use crate::error::{CoreError, Result};
use crate::quad;
use serde::{Deserialize, Serialize};

/// Parameters of the multiplier families: c₀ (weight rate), c₂ (the α = 2
/// phase-inequality constant), δ (regularization), N (regularizer exponent),
/// α (phase exponent for Kolmogorov-type weights).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseParams {
    pub alpha: f64,
    pub c0: f64,
    pub c2: f64,
    pub delta: f64,
    pub n_exp: f64,
}

/// The α = 2 constant of the phase-integral inequality, 1/(2^{α+1}(α+1)).
pub const C2_ALPHA2: f64 = 1.0 / 24.0;

impl PhaseParams {
    pub fn new(alpha: f64, c0: f64, delta: f64, n_exp: f64) -> Self {
        PhaseParams {
            alpha,
            c0,
            c2: C2_ALPHA2,
            delta,
            n_exp,
        }
    }

    /// Parameters for the homogeneous velocity-Gaussian family:
    /// N > d/4 + 1 and 0 ≤ δ < 1/N.
    pub fn homogeneous(dim: usize, c0: f64, delta: f64) -> Result<Self> {
        let n_exp = (dim as f64 / 4.0 + 1.0).floor() + 1.0;
        let p = PhaseParams::new(2.0, c0, delta, n_exp);
        p.validate_homogeneous(dim)?;
        Ok(p)
    }

    /// Parameters for the phase-Gaussian family: N = (2d+1)/4, 0 ≤ δ < 1/(4N²).
    pub fn fokker_planck(dim: usize, c0: f64, delta: f64) -> Result<Self> {
        let n_exp = (2.0 * dim as f64 + 1.0) / 4.0;
        let p = PhaseParams::new(2.0, c0, delta, n_exp);
        p.validate_fokker_planck(dim)?;
        Ok(p)
    }

    /// Parameters for the phase-analytic family: N = d+1, 0 ≤ δ ≤ 1/N.
    pub fn landau_model(dim: usize, c0: f64, delta: f64) -> Result<Self> {
        let n_exp = dim as f64 + 1.0;
        let p = PhaseParams::new(1.0, c0, delta, n_exp);
        p.validate_landau_model(dim)?;
        Ok(p)
    }

    pub fn validate_homogeneous(&self, dim: usize) -> Result<()> {
        if self.n_exp <= dim as f64 / 4.0 + 1.0 {
            return Err(CoreError::Configuration(format!(
                "multiplier exponent N = {} must exceed d/4 + 1 = {}",
                self.n_exp,
                dim as f64 / 4.0 + 1.0
            )));
        }
        self.check_delta(1.0 / self.n_exp)
    }

    pub fn validate_fokker_planck(&self, dim: usize) -> Result<()> {
        let n = (2.0 * dim as f64 + 1.0) / 4.0;
        if (self.n_exp - n).abs() > 1e-12 {
            return Err(CoreError::Configuration(format!(
                "phase-Gaussian family uses N = (2d+1)/4 = {n}, got {}",
                self.n_exp
            )));
        }
        self.check_delta(1.0 / (4.0 * n * n))
    }

    pub fn validate_landau_model(&self, dim: usize) -> Result<()> {
        let n = dim as f64 + 1.0;
        if (self.n_exp - n).abs() > 1e-12 {
            return Err(CoreError::Configuration(format!(
                "phase-analytic family uses N = d+1 = {n}, got {}",
                self.n_exp
            )));
        }
        // here δ = 1/N itself is admissible
        if self.delta < 0.0 || self.delta > 1.0 / n {
            return Err(CoreError::Configuration(format!(
                "delta = {} outside (0, {}]",
                self.delta,
                1.0 / n
            )));
        }
        Ok(())
    }

    fn check_delta(&self, upper: f64) -> Result<()> {
        if self.delta < 0.0 || self.delta >= upper {
            return Err(CoreError::Configuration(format!(
                "delta = {} outside [0, {upper})",
                self.delta
            )));
        }
        Ok(())
    }
}

/// Largest admissible c₀ for the homogeneous smoothing certificate:
/// C₁ − c₀/2 − 2c₀T ≥ 0.
pub fn admissible_c0_homogeneous(c1: f64, t_horizon: f64) -> f64 {
    c1 / (0.5 + 2.0 * t_horizon)
}

/// Largest admissible c₀ for the phase-Gaussian bound:
/// 2 − 3c₀ − 4c₀T − 2c₀T²/(3c₂) ≥ 0.
pub fn admissible_c0_fokker_planck(t_horizon: f64, c2: f64) -> f64 {
    2.0 / (3.0 + 4.0 * t_horizon + 2.0 * t_horizon * t_horizon / (3.0 * c2))
}

// ---------------------------------------------------------------------------
// phase integrals
// ---------------------------------------------------------------------------

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}

/// ∫₀ᵗ |ξ − sη|² ds = t|ξ|² − t²(ξ·η) + t³|η|²/3.
pub fn int_sq_phase(t: f64, xi: &[f64], eta: &[f64]) -> f64 {
    t * norm_sq(xi) - t * t * dot(xi, eta) + t * t * t * norm_sq(eta) / 3.0
}

/// ∫₀ᵗ |ξ − sη| ds in closed form (√-of-quadratic antiderivative via asinh).
pub fn int_abs_phase(t: f64, xi: &[f64], eta: &[f64]) -> f64 {
    let m2 = norm_sq(eta);
    if m2 == 0.0 {
        return t * norm_sq(xi).sqrt();
    }
    let m = m2.sqrt();
    let s_star = dot(xi, eta) / m2;
    // |ξ − sη|² = m²(s − s*)² + ρ², ρ² the squared distance of ξ to span(η)
    let rho_sq = (norm_sq(xi) - s_star * s_star * m2).max(0.0);
    let q = rho_sq / m2;
    let anti = |u: f64| -> f64 {
        if q == 0.0 {
            0.5 * u * u.abs()
        } else {
            let root = (u * u + q).sqrt();
            0.5 * (u * root + q * (u / q.sqrt()).asinh())
        }
    };
    m * (anti(t - s_star) - anti(-s_star))
}

/// Quadrature fallback for the same integral (oracle used in tests, and the
/// general-α path of the Kolmogorov phase).
pub fn phase_integral_quadrature(t: f64, xi: &[f64], eta: &[f64], power: f64) -> Result<f64> {
    let m2 = norm_sq(eta);
    let split = if m2 > 0.0 {
        Some(dot(xi, eta) / m2)
    } else {
        None
    };
    let xi = xi.to_vec();
    let eta = eta.to_vec();
    quad::integrate_split(
        move |s| {
            let mut acc = 0.0;
            for (x, e) in xi.iter().zip(&eta) {
                let v = x - s * e;
                acc += v * v;
            }
            acc.powf(power / 2.0)
        },
        0.0,
        t,
        split,
        1e-12,
    )
}

/// ∫₀ᵗ |ξ + sη|^{2α} ds, closed form for 2α ∈ {1, 2}, quadrature otherwise.
pub fn kolmogorov_phase(t: f64, xi: &[f64], eta: &[f64], alpha: f64) -> Result<f64> {
    let neg_eta: Vec<f64> = eta.iter().map(|e| -e).collect();
    let p = 2.0 * alpha;
    if (p - 2.0).abs() < 1e-14 {
        Ok(int_sq_phase(t, xi, &neg_eta))
    } else if (p - 1.0).abs() < 1e-14 {
        Ok(int_abs_phase(t, xi, &neg_eta))
    } else {
        phase_integral_quadrature(t, xi, &neg_eta, p)
    }
}

/// Ψ(t,η,ξ) = c₀ ∫₀ᵗ |ξ − sη| ds.
pub fn psi_weight(t: f64, eta: &[f64], xi: &[f64], c0: f64) -> f64 {
    c0 * int_abs_phase(t, xi, eta)
}

/// φ(t,η,ξ) = c₀(∫₀ᵗ|ξ−sη|²ds − (c₂/2)t³|η|²).
pub fn phi_weight(t: f64, eta: &[f64], xi: &[f64], p: &PhaseParams) -> f64 {
    p.c0 * (int_sq_phase(t, xi, eta) - 0.5 * p.c2 * t * t * t * norm_sq(eta))
}

// ---------------------------------------------------------------------------
// δ-regularized multipliers (log space)
// ---------------------------------------------------------------------------

/// ln(1 + e^x) without overflow.
fn ln1p_exp(x: f64) -> f64 {
    if x > 30.0 {
        x + (-x).exp().ln_1p()
    } else if x < -30.0 {
        x.exp()
    } else {
        x.exp().ln_1p()
    }
}

/// log of e^E / [(1+δe^E)(1+δP)^N].
fn log_regularized(e: f64, pole: f64, delta: f64, n_exp: f64) -> f64 {
    if delta == 0.0 {
        return e;
    }
    e - ln1p_exp(delta.ln() + e) - n_exp * (delta * pole).ln_1p()
}

/// §-homogeneous multiplier G_δ(t,|ξ|); value in (0, 1/δ] for δ > 0.
pub fn gdelta_homogeneous(t: f64, xi: &[f64], p: &PhaseParams) -> f64 {
    log_gdelta_homogeneous(t, xi, p).exp()
}

pub fn log_gdelta_homogeneous(t: f64, xi: &[f64], p: &PhaseParams) -> f64 {
    let e = p.c0 * t * norm_sq(xi);
    log_regularized(e, e, p.delta, p.n_exp)
}

/// Phase-Gaussian multiplier built on φ; regularizer pole is |η|²+|ξ|².
pub fn gdelta_phase(t: f64, eta: &[f64], xi: &[f64], p: &PhaseParams) -> f64 {
    log_gdelta_phase(t, eta, xi, p).exp()
}

pub fn log_gdelta_phase(t: f64, eta: &[f64], xi: &[f64], p: &PhaseParams) -> f64 {
    let e = phi_weight(t, eta, xi, p);
    log_regularized(e, norm_sq(eta) + norm_sq(xi), p.delta, p.n_exp)
}

/// Phase-analytic multiplier F_δ built on Ψ.
pub fn fdelta_multiplier(t: f64, eta: &[f64], xi: &[f64], p: &PhaseParams) -> f64 {
    log_fdelta_multiplier(t, eta, xi, p).exp()
}

pub fn log_fdelta_multiplier(t: f64, eta: &[f64], xi: &[f64], p: &PhaseParams) -> f64 {
    let e = psi_weight(t, eta, xi, p.c0);
    log_regularized(e, e, p.delta, p.n_exp)
}

// ---------------------------------------------------------------------------
// weight descriptors
// ---------------------------------------------------------------------------

/// Which weight family a probe uses.
///
/// `sheared` variants evaluate the phase at (η, ξ + tη); that is the weight
/// the transformed unknown w(t,η,ξ) = f̂(t,η,ξ−tη) sees, re-expressed on the
/// untransformed spectrum, so no off-lattice interpolation is ever needed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum WeightKind {
    /// m ≡ 1.
    Plain,
    /// e^{c₀t|ξ|²}, δ-regularized as G_δ(t,|ξ|).
    GaussVelocity,
    /// e^{φ(t,η,ξ)}, δ-regularized with pole |η|²+|ξ|².
    PhaseGauss { sheared: bool },
    /// e^{Ψ(t,η,ξ)}, δ-regularized as F_δ.
    PhaseAnalytic { sheared: bool },
    /// e^{c₀(t^{a}|ξ|^{p} + t^{b}|η|^{q})} with (p, q, a, b) free.
    PowerLaw {
        xi_pow: f64,
        eta_pow: f64,
        t_pow_xi: f64,
        t_pow_eta: f64,
    },
}

/// A weight family plus its parameters: everything needed to evaluate the
/// multiplier at any (t, η, ξ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiplierSpec {
    pub kind: WeightKind,
    pub params: PhaseParams,
}

impl MultiplierSpec {
    pub fn plain() -> Self {
        MultiplierSpec {
            kind: WeightKind::Plain,
            params: PhaseParams::new(2.0, 0.0, 0.0, 1.0),
        }
    }

    pub fn gauss_velocity(p: PhaseParams) -> Self {
        MultiplierSpec {
            kind: WeightKind::GaussVelocity,
            params: p,
        }
    }

    /// e^{c(t|ξ|² + t³|η|²)} — the ultra-analytic phase-space weight.
    pub fn ultra_analytic(c: f64) -> Self {
        MultiplierSpec {
            kind: WeightKind::PowerLaw {
                xi_pow: 2.0,
                eta_pow: 2.0,
                t_pow_xi: 1.0,
                t_pow_eta: 3.0,
            },
            params: PhaseParams::new(2.0, c, 0.0, 1.0),
        }
    }

    /// e^{c(t|ξ| + t²|η|)} — the analytic (Gevrey-1) phase-space weight.
    pub fn gevrey_one(c: f64) -> Self {
        MultiplierSpec {
            kind: WeightKind::PowerLaw {
                xi_pow: 1.0,
                eta_pow: 1.0,
                t_pow_xi: 1.0,
                t_pow_eta: 2.0,
            },
            params: PhaseParams::new(1.0, c, 0.0, 1.0),
        }
    }

    /// e^{c(t|ξ|² + t²|η|²)} — the Gevrey-1/2 probe used to show the model is
    /// *not* ultra-analytic.
    pub fn gevrey_half_probe(c: f64) -> Self {
        MultiplierSpec {
            kind: WeightKind::PowerLaw {
                xi_pow: 2.0,
                eta_pow: 2.0,
                t_pow_xi: 1.0,
                t_pow_eta: 2.0,
            },
            params: PhaseParams::new(2.0, c, 0.0, 1.0),
        }
    }

    /// log m(t, η, ξ).
    pub fn log_eval(&self, t: f64, eta: &[f64], xi: &[f64]) -> f64 {
        let p = &self.params;
        match self.kind {
            WeightKind::Plain => 0.0,
            WeightKind::GaussVelocity => log_gdelta_homogeneous(t, xi, p),
            WeightKind::PhaseGauss { sheared } => {
                if sheared {
                    let shifted: Vec<f64> =
                        xi.iter().zip(eta).map(|(x, e)| x + t * e).collect();
                    log_gdelta_phase(t, eta, &shifted, p)
                } else {
                    log_gdelta_phase(t, eta, xi, p)
                }
            }
            WeightKind::PhaseAnalytic { sheared } => {
                if sheared {
                    let shifted: Vec<f64> =
                        xi.iter().zip(eta).map(|(x, e)| x + t * e).collect();
                    log_fdelta_multiplier(t, eta, &shifted, p)
                } else {
                    log_fdelta_multiplier(t, eta, xi, p)
                }
            }
            WeightKind::PowerLaw {
                xi_pow,
                eta_pow,
                t_pow_xi,
                t_pow_eta,
            } => {
                let xin = norm_sq(xi).sqrt();
                let etan = norm_sq(eta).sqrt();
                let e = p.c0
                    * (t.powf(t_pow_xi) * xin.powf(xi_pow)
                        + t.powf(t_pow_eta) * etan.powf(eta_pow));
                log_regularized(e, e, p.delta, p.n_exp)
            }
        }
    }

    /// Plain value; +∞ possible for δ = 0 weights on coarse lattices, which
    /// is exactly when callers must switch to `log_eval`.
    pub fn eval(&self, t: f64, eta: &[f64], xi: &[f64]) -> f64 {
        self.log_eval(t, eta, xi).exp()
    }
}

/// Split a grid's mode-frequency vector into (η, ξ) parts.
pub fn split_freqs<'a>(dim_x: usize, freqs: &'a [f64]) -> (&'a [f64], &'a [f64]) {
    freqs.split_at(dim_x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_abs_matches_quadrature() {
        let cases = [
            (1.0, vec![1.0, 0.0], vec![0.0, 1.0]),
            (2.0, vec![1.0, 0.0], vec![1.0, 0.0]),
            (0.7, vec![0.3, -1.2], vec![2.0, 0.4]),
            (3.0, vec![0.0, 0.0], vec![1.0, 1.0]),
        ];
        for (t, xi, eta) in cases {
            let closed = int_abs_phase(t, &xi, &eta);
            let qr = phase_integral_quadrature(t, &xi, &eta, 1.0).unwrap();
            assert!(
                (closed - qr).abs() <= 1e-10 * (1.0 + qr.abs()),
                "t={t} xi={xi:?} eta={eta:?}: {closed} vs {qr}"
            );
        }
    }

    #[test]
    fn psi_trivial_branches() {
        // η = 0 → c₀ t |ξ|
        let v = psi_weight(2.0, &[0.0, 0.0], &[3.0, 4.0], 0.1);
        assert!((v - 0.1 * 2.0 * 5.0).abs() < 1e-14);
        // ξ = 0, t = 1, |η| = 1 → c₀/2
        let v = psi_weight(1.0, &[1.0, 0.0], &[0.0, 0.0], 0.3);
        assert!((v - 0.15).abs() < 1e-14);
        // |1 − s| on [0,2] integrates to 1
        let v = psi_weight(2.0, &[1.0, 0.0], &[1.0, 0.0], 1.0);
        assert!((v - 1.0).abs() < 1e-13);
    }

    #[test]
    fn gdelta_examples() {
        // ξ = 0 → 1/(1+δ)
        let p = PhaseParams::new(2.0, 0.1, 0.01, 2.0);
        let v = gdelta_homogeneous(1.0, &[0.0, 0.0], &p);
        assert!((v - 1.0 / 1.01).abs() < 1e-14);

        // t = 1, |ξ| = 2, c₀ = 0.1, δ = 0.01, N = 2
        let v = gdelta_homogeneous(1.0, &[2.0, 0.0], &p);
        let e = (0.4f64).exp();
        let expect = e / ((1.0 + 0.01 * e) * 1.004f64.powi(2));
        assert!((v - expect).abs() < 1e-12 * expect);

        // δ → 0 limit is the pure exponential
        let p0 = PhaseParams::new(2.0, 0.1, 0.0, 2.0);
        let v = gdelta_homogeneous(1.0, &[2.0, 0.0], &p0);
        assert!((v - e).abs() < 1e-12 * e);
    }

    #[test]
    fn fdelta_at_zero_phase() {
        let p = PhaseParams::new(1.0, 0.2, 0.25, 3.0);
        // Ψ = 0 at t = 0 → 1/(1+δ)
        let v = fdelta_multiplier(0.0, &[1.0, 1.0], &[2.0, -1.0], &p);
        assert!((v - 1.0 / 1.25).abs() < 1e-14);
    }

    #[test]
    fn multipliers_bounded_by_inverse_delta() {
        let p = PhaseParams::new(2.0, 0.5, 0.05, 2.0);
        let mut worst: f64 = 0.0;
        for i in 0..50 {
            let xi = [i as f64 * 0.8, 1.5];
            let eta = [0.3 * i as f64, -0.7];
            worst = worst.max(gdelta_homogeneous(2.0, &xi, &p));
            worst = worst.max(gdelta_phase(2.0, &eta, &xi, &p));
            let pf = PhaseParams::new(1.0, 0.5, 0.05, 3.0);
            worst = worst.max(fdelta_multiplier(2.0, &eta, &xi, &pf));
        }
        assert!(worst <= 1.0 / 0.05 + 1e-9);
        assert!(worst > 0.0);
    }

    #[test]
    fn regularized_log_stays_finite_at_huge_exponent() {
        let p = PhaseParams::new(2.0, 1.0, 1e-4, 2.0);
        let lg = log_gdelta_homogeneous(10.0, &[40.0, 0.0], &p); // E = 16000
        assert!(lg.is_finite());
        // bounded by −ln δ
        assert!(lg <= -(1e-4f64).ln() + 1e-9);
    }
}
