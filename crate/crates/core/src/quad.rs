//! Adaptive Gauss–Legendre quadrature for the phase integrals ∫₀ᵗ |ξ−sη|^α ds.
//!
//! Nodes and weights are generated once by Newton iteration on the Legendre
//! polynomial, so no tabulated constants are needed.

use crate::error::{CoreError, Result};
use std::sync::OnceLock;

const RULE_ORDER: usize = 15;
const MAX_DEPTH: usize = 48;

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(RULE_ORDER))
}

/// Nodes (on [−1,1]) and weights of the k-point Gauss–Legendre rule.
fn gauss_legendre(k: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; k];
    let mut weights = vec![0.0; k];
    for i in 0..(k + 1) / 2 {
        // Chebyshev-like seed, then Newton on P_k
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (k as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(k, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(k, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[k - 1 - i] = x;
        weights[i] = w;
        weights[k - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(k: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=k {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let dp = k as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn panel(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (nodes, weights) = rule();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(weights.iter()) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

fn adaptive(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> Result<f64> {
    let mid = 0.5 * (a + b);
    let left = panel(f, a, mid);
    let right = panel(f, mid, b);
    let refined = left + right;
    if (refined - whole).abs() <= tol * (1.0 + refined.abs()) || depth >= MAX_DEPTH {
        if depth >= MAX_DEPTH && (refined - whole).abs() > 1e6 * tol * (1.0 + refined.abs()) {
            return Err(CoreError::Numerical(format!(
                "quadrature failed to converge on [{a}, {b}]: panel defect {}",
                (refined - whole).abs()
            )));
        }
        return Ok(refined);
    }
    // the tolerance floor keeps endpoint kinks from forcing sub-roundoff
    // accuracy demands (and with them an exponential panel tree)
    let child_tol = (0.5 * tol).max(5e-16);
    Ok(adaptive(f, a, mid, left, child_tol, depth + 1)?
        + adaptive(f, mid, b, right, child_tol, depth + 1)?)
}

/// ∫ₐᵇ f with relative tolerance `tol`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let whole = panel(&f, a, b);
    adaptive(&f, a, b, whole, tol, 0)
}

/// Integrate with an interior split point (for integrands with one kink,
/// like |ξ − sη| at the minimizer of the quadratic underneath).
pub fn integrate_split(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    split: Option<f64>,
    tol: f64,
) -> Result<f64> {
    match split {
        Some(s) if s > a && s < b => Ok(integrate(&f, a, s, tol)? + integrate(&f, s, b, tol)?),
        _ => integrate(f, a, b, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let v = integrate(|x| x * x * x - 2.0 * x + 1.0, 0.0, 2.0, 1e-13).unwrap();
        // ∫₀² (x³ − 2x + 1) = 4 − 4 + 2 = 2
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn kink_with_split() {
        let v = integrate_split(|x| (x - 0.3).abs(), 0.0, 1.0, Some(0.3), 1e-13).unwrap();
        let exact = 0.5 * (0.3f64.powi(2) + 0.7f64.powi(2));
        assert!((v - exact).abs() < 1e-12);
    }

    #[test]
    fn gaussian_tail() {
        let v = integrate(|x| (-x * x).exp(), -8.0, 8.0, 1e-13).unwrap();
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-12);
    }
}
