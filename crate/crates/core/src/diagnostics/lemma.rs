//! Brute-force verification of the phase-integral inequality
//!
//!   ∫₀ᵗ |ξ − sη|^α ds ≥ c_α (t|ξ|^α + t^{α+1}|η|^α),  c_α = 1/(2^{α+1}(α+1)),
//!
//! via the scale reduction s = tτ, η̃ = tη, which turns the claim into
//! ∫₀¹|ξ̂ − τη̃|^α dτ ≥ c_α(|ξ̂|^α + |η̃|^α) with |ξ̂| = 1 after homogeneity.

use crate::error::Result;
use crate::quad;
use serde::{Deserialize, Serialize};

/// Outcome of one inequality scan.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LemmaReport {
    pub alpha: f64,
    /// 1/(2^{α+1}(α+1)).
    pub paper_constant: f64,
    /// min over the scan of ∫₀¹|ξ̂−τη̃|^α dτ / (|ξ̂|^α + |η̃|^α).
    pub empirical_min: f64,
    /// Angle between ξ̂ and η̃ at the minimizer.
    pub argmin_angle: f64,
    /// ln(|η̃|/|ξ̂|) at the minimizer.
    pub argmin_log_ratio: f64,
}

/// Sharp constant the inequality is checked against.
pub fn paper_constant(alpha: f64) -> f64 {
    1.0 / (2.0f64.powf(alpha + 1.0) * (alpha + 1.0))
}

/// Normalized objective at angle θ and λ = |η̃|/|ξ̂|.
/// Closed forms for α ∈ {1, 2}; adaptive quadrature otherwise.
pub fn normalized_ratio(alpha: f64, theta: f64, lambda: f64) -> Result<f64> {
    let denom = 1.0 + lambda.powf(alpha);
    if (alpha - 2.0).abs() < 1e-14 {
        // ∫₀¹(1 − 2τλcosθ + τ²λ²)dτ = 1 − λcosθ + λ²/3
        return Ok((1.0 - lambda * theta.cos() + lambda * lambda / 3.0) / denom);
    }
    if (alpha - 1.0).abs() < 1e-14 {
        let xi = [1.0, 0.0];
        let eta = [lambda * theta.cos(), lambda * theta.sin()];
        return Ok(crate::weights::int_abs_phase(1.0, &xi, &eta) / denom);
    }
    let c = theta.cos();
    let split = if lambda > 0.0 {
        Some((c / lambda).clamp(0.0, 1.0))
    } else {
        None
    };
    let integral = quad::integrate_split(
        |tau| {
            let q = (1.0 - 2.0 * tau * lambda * c + tau * tau * lambda * lambda).max(0.0);
            q.powf(alpha / 2.0)
        },
        0.0,
        1.0,
        split,
        1e-10,
    )?;
    Ok(integral / denom)
}

/// Scan angle × log-ratio for the empirical minimum, with two local
/// refinement rounds around the coarse minimizer.
pub fn lemma_verify(alpha: f64, n_angle: usize, n_ratio: usize) -> Result<LemmaReport> {
    let scan = |th_lo: f64, th_hi: f64, u_lo: f64, u_hi: f64, na: usize, nr: usize|
     -> Result<(f64, f64, f64)> {
        let mut local = (f64::INFINITY, 0.0f64, 0.0f64);
        for i in 0..na {
            let theta = th_lo + (th_hi - th_lo) * i as f64 / (na - 1) as f64;
            for j in 0..nr {
                let u = u_lo + (u_hi - u_lo) * j as f64 / (nr - 1) as f64;
                let v = normalized_ratio(alpha, theta, u.exp())?;
                if v < local.0 {
                    local = (v, theta, u);
                }
            }
        }
        Ok(local)
    };

    let mut best = scan(0.0, std::f64::consts::PI, -6.0, 6.0, n_angle, n_ratio)?;
    let mut dth = std::f64::consts::PI / (n_angle - 1) as f64;
    let mut du = 12.0 / (n_ratio - 1) as f64;
    for _ in 0..2 {
        let th_lo = (best.1 - 2.0 * dth).max(0.0);
        let th_hi = (best.1 + 2.0 * dth).min(std::f64::consts::PI);
        let u_lo = (best.2 - 2.0 * du).max(-6.0);
        let u_hi = (best.2 + 2.0 * du).min(6.0);
        let fine = scan(th_lo, th_hi, u_lo, u_hi, 33, 33)?;
        if fine.0 < best.0 {
            best = fine;
        }
        dth = (th_hi - th_lo) / 32.0;
        du = (u_hi - u_lo) / 32.0;
    }

    Ok(LemmaReport {
        alpha,
        paper_constant: paper_constant(alpha),
        empirical_min: best.0,
        argmin_angle: best.1,
        argmin_log_ratio: best.2,
    })
}

/// 1-D oracle for α = 2: golden-section minimization of
/// (1 − λ + λ²/3)/(1 + λ²) over λ > 0 (the aligned-vectors section, which is
/// where the 2-D minimum sits).
pub fn alpha2_min_oracle() -> (f64, f64) {
    let f = |l: f64| (1.0 - l + l * l / 3.0) / (1.0 + l * l);
    let (mut a, mut b) = (0.0f64, 10.0f64);
    let phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let (mut c, mut d) = (b - phi * (b - a), a + phi * (b - a));
    for _ in 0..200 {
        if f(c) < f(d) {
            b = d;
        } else {
            a = c;
        }
        c = b - phi * (b - a);
        d = a + phi * (b - a);
    }
    let l = 0.5 * (a + b);
    (f(l), l)
}

/// Report for the generalized Kolmogorov decay inequality: the phase
/// ∫₀ᵗ|ξ+sη|^{2α}ds dominates c·(t|ξ|^{2α} + t^{2α+1}|η|^{2α}) with c the
/// *empirical* constant of the exponent-2α scan.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KolmogorovBoundReport {
    pub alpha: f64,
    pub exponent: f64,
    pub constant_used: f64,
    /// min over samples of phase / (c·bound); ≥ 1 up to roundoff when the
    /// inequality holds.
    pub min_ratio: f64,
    pub samples: usize,
}

pub fn kolmogorov_bound_verify(
    alpha: f64,
    n_samples: usize,
    seed: u64,
) -> Result<KolmogorovBoundReport> {
    use rand::{Rng, SeedableRng};
    let exponent = 2.0 * alpha;
    let lemma = lemma_verify(exponent, 128, 128)?;
    let c = lemma.empirical_min;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut min_ratio = f64::INFINITY;
    for _ in 0..n_samples {
        let t: f64 = rng.gen_range(0.01..5.0);
        let xi = [rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0)];
        let eta = [rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0)];
        let phase = crate::weights::kolmogorov_phase(t, &xi, &eta, alpha)?;
        let xin = (xi[0] * xi[0] + xi[1] * xi[1]).sqrt();
        let etan = (eta[0] * eta[0] + eta[1] * eta[1]).sqrt();
        let bound = c * (t * xin.powf(exponent) + t.powf(exponent + 1.0) * etan.powf(exponent));
        if bound > 0.0 {
            min_ratio = min_ratio.min(phase / bound);
        }
    }
    Ok(KolmogorovBoundReport {
        alpha,
        exponent,
        constant_used: c,
        min_ratio,
        samples: n_samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha2_closed_form_matches_analytic_minimizer() {
        let (val, l) = alpha2_min_oracle();
        // stationarity condition λ² − 4λ/3 − 1 = 0 → λ* = (2 + √13)/3;
        // value-comparison search localizes the minimizer only to ~√ε
        let lam = (2.0 + 13.0f64.sqrt()) / 3.0;
        assert!((l - lam).abs() < 1e-6);
        let expect = (1.0 - lam + lam * lam / 3.0) / (1.0 + lam * lam);
        assert!((val - expect).abs() < 1e-12);
        // headline value ≈ 0.0657 at ratio ≈ 1.87, comfortably above 1/24
        assert!((val - 0.0657).abs() < 1e-4);
        assert!(val >= paper_constant(2.0));
    }

    #[test]
    fn scan_matches_oracle_for_alpha2() {
        let rep = lemma_verify(2.0, 256, 256).unwrap();
        let (oracle, lam) = alpha2_min_oracle();
        assert!(
            (rep.empirical_min - oracle).abs() < 1e-4,
            "scan {} vs oracle {oracle}",
            rep.empirical_min
        );
        assert!(rep.empirical_min >= rep.paper_constant);
        // minimizer at aligned vectors, ratio ≈ 1.87
        assert!(rep.argmin_angle < 0.05);
        assert!((rep.argmin_log_ratio.exp() - lam).abs() < 0.05);
    }

    #[test]
    fn eta_zero_ratio_is_one() {
        // λ → 0 limit of the ratio is 1 for any α
        let v = normalized_ratio(1.3, 0.7, 1e-12).unwrap();
        assert!((v - 1.0).abs() < 1e-6);
    }

    #[test]
    fn empirical_min_dominates_paper_constant_for_each_alpha() {
        // coarse scan here; the acceptance suite runs the full 256×256 scan
        for &alpha in &[0.5, 1.0, 2.0, 3.0, 4.0] {
            let rep = lemma_verify(alpha, 32, 32).unwrap();
            assert!(
                rep.empirical_min >= rep.paper_constant,
                "alpha={alpha}: {} < {}",
                rep.empirical_min,
                rep.paper_constant
            );
            assert!(rep.empirical_min <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn kolmogorov_bound_holds_on_samples() {
        // 2α ∈ {1, 2}: both phase and lemma objective use closed forms
        for &alpha in &[0.5, 1.0] {
            let rep = kolmogorov_bound_verify(alpha, 400, 11).unwrap();
            assert!(
                rep.min_ratio >= 1.0 - 1e-9,
                "alpha={alpha}: min ratio {}",
                rep.min_ratio
            );
        }
    }

    #[test]
    fn phase_scales_with_stated_powers() {
        // t|ξ|^{2α} scales linearly and t^{2α+1}|η|^{2α} with its own power
        let alpha = 1.0;
        let (t, xi, eta) = (0.7, [1.3f64, -0.2], [0.4f64, 2.0]);
        let b = |t: f64| {
            let xin = (xi[0] * xi[0] + xi[1] * xi[1]).sqrt();
            let etan = (eta[0] * eta[0] + eta[1] * eta[1]).sqrt();
            (
                t * xin.powf(2.0 * alpha),
                t.powf(2.0 * alpha + 1.0) * etan.powf(2.0 * alpha),
            )
        };
        let (p1, q1) = b(t);
        let (p2, q2) = b(2.0 * t);
        assert!((p2 / p1 - 2.0).abs() < 1e-12);
        assert!((q2 / q1 - 2.0f64.powf(2.0 * alpha + 1.0)).abs() < 1e-12);
    }
}
