//! Ratio curves: the left/right sides of the smoothing estimates
//! ‖weight·f̂(t)‖ ≤ e^{κt}‖f₀‖, materialized per recorded time, plus the
//! lattice notion of "radius exceeded" and the bisection that measures the
//! largest weight rate a spectrum supports.

use crate::spectral::SpectralField;
use crate::weights::MultiplierSpec;
use serde::{Deserialize, Serialize};

/// Weighted mass is "cutoff-dominated" when more than this fraction sits in
/// the outer velocity-frequency band; on a grid that is the signature of a
/// continuum norm that would diverge.
pub const RADIUS_TAIL_TOL: f64 = 1e-2;
/// The outer band starts at this fraction of the populated frequency range.
const BAND_START: f64 = 0.8;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatioRow {
    pub t: f64,
    pub log_weighted: f64,
    pub log_bound: f64,
    pub ratio: f64,
    pub pass: bool,
    pub radius_exceeded: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatioCurve {
    pub weight: MultiplierSpec,
    pub growth_rate: f64,
    pub tolerance: f64,
    pub rows: Vec<RatioRow>,
    pub all_pass: bool,
}

/// log ‖m(t,·)·coeffs‖ for a weight described by `spec`, evaluated stably in
/// log space, together with the boundary-band mass fraction.
pub fn log_weighted_norm_and_tail(
    field: &SpectralField,
    weight: &MultiplierSpec,
    t: f64,
) -> (f64, f64) {
    let grid = field.grid();
    let d = grid.dims();
    let dx = grid.dim_x();
    let mut freqs = vec![0.0; d];

    // populated velocity range (per-axis sup norm) for the band definition;
    // roundoff-level residue from masked transforms does not count
    let peak = field
        .coeffs()
        .iter()
        .map(|c| c.norm())
        .fold(0.0f64, f64::max);
    let populated_floor = 1e-14 * peak;
    let mut xi_sup = 0.0f64;
    for (flat, c) in field.coeffs().iter().enumerate() {
        if c.norm() <= populated_floor {
            continue;
        }
        grid.mode_freqs(flat, &mut freqs);
        for x in &freqs[dx..] {
            xi_sup = xi_sup.max(x.abs());
        }
    }
    let band = BAND_START * xi_sup;

    let mut terms: Vec<(f64, bool)> = Vec::with_capacity(field.coeffs().len());
    let mut max_term = f64::NEG_INFINITY;
    for (flat, c) in field.coeffs().iter().enumerate() {
        let a = c.norm();
        if a == 0.0 {
            continue;
        }
        grid.mode_freqs(flat, &mut freqs);
        let (eta, xi) = freqs.split_at(dx);
        let lw = weight.log_eval(t, eta, xi) + a.ln();
        let in_band = xi.iter().any(|x| x.abs() >= band && band > 0.0);
        terms.push((lw, in_band));
        if lw > max_term {
            max_term = lw;
        }
    }
    if max_term == f64::NEG_INFINITY {
        return (f64::NEG_INFINITY, 0.0);
    }
    let mut total = 0.0f64;
    let mut tail = 0.0f64;
    for (lw, in_band) in &terms {
        let e = (2.0 * (lw - max_term)).exp();
        total += e;
        if *in_band {
            tail += e;
        }
    }
    let log_norm = max_term + 0.5 * (total.ln() + field.grid().dual_cell_volume().ln());
    (log_norm, tail / total)
}

/// Build a ratio curve from time-stamped spectra against the growth bound
/// e^{κt}·base, flagging rows whose weighted mass is cutoff-dominated.
pub fn ratio_curve(
    states: &[(f64, &SpectralField)],
    weight: MultiplierSpec,
    growth_rate: f64,
    log_base_norm: f64,
    tolerance: f64,
) -> RatioCurve {
    let rows: Vec<RatioRow> = states
        .iter()
        .map(|(t, spec)| {
            let (log_w, tail) = log_weighted_norm_and_tail(spec, &weight, *t);
            let log_bound = growth_rate * t + log_base_norm;
            let ratio = (log_w - log_bound).exp();
            let radius_exceeded = tail > RADIUS_TAIL_TOL || !log_w.is_finite() && log_w > 0.0;
            RatioRow {
                t: *t,
                log_weighted: log_w,
                log_bound,
                ratio,
                pass: ratio <= 1.0 + tolerance,
                radius_exceeded,
            }
        })
        .collect();
    let all_pass = rows.iter().all(|r| r.pass);
    RatioCurve {
        weight,
        growth_rate,
        tolerance,
        rows,
        all_pass,
    }
}

/// Result of probing how fast a weight can grow before the weighted spectrum
/// becomes cutoff-dominated.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadiusProbe {
    /// Largest passing rate found by bisection (0 when even c → 0⁺ fails).
    pub c_star: f64,
    /// Smallest rate the lattice can distinguish from a flat weight.
    pub c_resolve: f64,
    /// Sweep of (rate, passed) used for fail-everywhere assertions.
    pub sweep: Vec<(f64, bool)>,
}

/// Whether the weighted spectrum stays interior-dominated at rate `c`.
pub fn radius_pass(
    field: &SpectralField,
    make_weight: &dyn Fn(f64) -> MultiplierSpec,
    t: f64,
    c: f64,
) -> bool {
    let (log_w, tail) = log_weighted_norm_and_tail(field, &make_weight(c), t);
    log_w.is_finite() && tail <= RADIUS_TAIL_TOL
}

/// Smallest rate whose weight reaches the factor e^{ln 50} ≈ 50 somewhere on
/// the populated lattice; weights below that are numerically flat.
pub fn resolvable_rate(
    field: &SpectralField,
    make_weight: &dyn Fn(f64) -> MultiplierSpec,
    t: f64,
) -> f64 {
    let grid = field.grid();
    let d = grid.dims();
    let dx = grid.dim_x();
    let mut freqs = vec![0.0; d];
    let unit = make_weight(1.0);
    let peak = field
        .coeffs()
        .iter()
        .map(|c| c.norm())
        .fold(0.0f64, f64::max);
    let populated_floor = 1e-14 * peak;
    let mut u_max = 0.0f64;
    for (flat, c) in field.coeffs().iter().enumerate() {
        if c.norm() <= populated_floor {
            continue;
        }
        grid.mode_freqs(flat, &mut freqs);
        let (eta, xi) = freqs.split_at(dx);
        u_max = u_max.max(unit.log_eval(t, eta, xi));
    }
    if u_max <= 0.0 {
        return f64::INFINITY;
    }
    50.0f64.ln() / u_max
}

/// Bisect for the largest passing rate in [0, c_max], and sweep doublings of
/// the resolvable rate to document where the weight family fails.
pub fn bisect_radius(
    field: &SpectralField,
    make_weight: &dyn Fn(f64) -> MultiplierSpec,
    t: f64,
    c_max: f64,
    sweep_steps: usize,
) -> RadiusProbe {
    let c_resolve = resolvable_rate(field, make_weight, t);

    let c_star = if radius_pass(field, make_weight, t, c_max) {
        c_max
    } else {
        let (mut lo, mut hi) = (0.0f64, c_max);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if radius_pass(field, make_weight, t, mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };

    let mut sweep = Vec::new();
    if c_resolve.is_finite() {
        let mut c = c_resolve;
        for _ in 0..sweep_steps {
            sweep.push((c, radius_pass(field, make_weight, t, c)));
            c *= 2.0;
        }
    }
    RadiusProbe {
        c_star,
        c_resolve,
        sweep,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{forward_transform, Field, Grid};
    use crate::weights::{MultiplierSpec, PhaseParams, WeightKind};

    fn heat_states(t: f64) -> (SpectralField, SpectralField) {
        // rough L² data pushed through the heat semigroup e^{−t|ξ|²}
        let grid = Grid::velocity(1, 256, 12.0).unwrap();
        let f0 = crate::presets::rough_velocity(grid, 42).unwrap();
        let spec0 = forward_transform(&f0);
        let mut evolved = spec0.clone();
        let g = grid;
        let mut freqs = vec![0.0; 1];
        for (flat, c) in evolved.coeffs_mut().iter_mut().enumerate() {
            g.mode_freqs(flat, &mut freqs);
            *c *= (-t * freqs[0] * freqs[0]).exp();
        }
        (spec0, evolved)
    }

    fn gauss_weight(c: f64) -> MultiplierSpec {
        MultiplierSpec {
            kind: WeightKind::PowerLaw {
                xi_pow: 2.0,
                eta_pow: 2.0,
                t_pow_xi: 0.0,
                t_pow_eta: 0.0,
            },
            params: PhaseParams::new(2.0, c, 0.0, 1.0),
        }
    }

    #[test]
    fn heat_flow_half_radius_passes_double_radius_flagged() {
        let t = 0.1;
        let (spec0, evolved) = heat_states(t);
        let base = spec0.l2_norm().ln();

        // weight e^{(t/2)|ξ|²}: half the sharp radius → ratios ≤ 1
        let half = ratio_curve(&[(t, &evolved)], gauss_weight(0.5 * t), 0.0, base, 1e-9);
        assert!(half.all_pass);
        assert!(!half.rows[0].radius_exceeded);

        // weight e^{2t|ξ|²}: beyond the sharp radius t → cutoff-dominated
        let double = ratio_curve(&[(t, &evolved)], gauss_weight(2.0 * t), 0.0, base, 1e-9);
        assert!(double.rows[0].radius_exceeded);
    }

    #[test]
    fn bisection_brackets_the_heat_radius() {
        let t = 0.1;
        let (_, evolved) = heat_states(t);
        let probe = bisect_radius(&evolved, &gauss_weight, t, 10.0 * t, 8);
        // sharp Gaussian radius coefficient is exactly t
        assert!(probe.c_star > 0.5 * t, "c* = {}", probe.c_star);
        assert!(probe.c_star < 1.5 * t, "c* = {}", probe.c_star);
        assert!(probe.c_resolve < probe.c_star);
    }

    #[test]
    fn monotone_under_weight_domination() {
        let t = 0.1;
        let (_, evolved) = heat_states(t);
        let (small, _) = log_weighted_norm_and_tail(&evolved, &gauss_weight(0.02), t);
        let (large, _) = log_weighted_norm_and_tail(&evolved, &gauss_weight(0.05), t);
        assert!(large >= small);
    }

    #[test]
    fn t_zero_row_has_unit_ratio() {
        // a theorem-style weight (exponent ∝ t) is the identity at t = 0
        let grid = Grid::velocity(1, 64, 12.0).unwrap();
        let f = Field::from_fn(grid, |v| (-v[0] * v[0]).exp());
        let spec = forward_transform(&f);
        let base = spec.l2_norm().ln();
        let weight = MultiplierSpec::ultra_analytic(0.3);
        let curve = ratio_curve(&[(0.0, &spec)], weight, 0.5, base, 1e-9);
        assert!((curve.rows[0].ratio - 1.0).abs() < 1e-12);
        assert!(curve.rows[0].pass);
    }
}
