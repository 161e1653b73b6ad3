//! Explicit RK4 time integration of the homogeneous Landau equation with
//! per-stage coefficient refresh (the moments are conserved in exact
//! arithmetic, so the refresh doubles as a drift monitor).

use super::coefficients::{coefficients_from_state, LandauCoefficients};
use super::collision::LandauOperator;
use crate::diagnostics::log_weighted_norm_and_tail;
use crate::error::{CoreError, Result};
use crate::spectral::{moments, Field, Grid, MomentSet};
use crate::weights::MultiplierSpec;
use serde::{Deserialize, Serialize};

/// dt = 0.2·h²/λ_max(ā) with λ_max evaluated at the truncation corner,
/// where the quadratically growing coefficients are largest.
pub fn stability_dt(grid: Grid, c: &LandauCoefficients) -> f64 {
    let h = grid.spacing(grid.dim_x());
    let vsq_max = grid.dim_v() as f64 * grid.half_width_v() * grid.half_width_v();
    0.2 * h * h / c.lambda_max(vsq_max)
}

#[derive(Debug, Clone)]
pub struct EvolveOptions {
    /// None → the stability rule picks dt.
    pub dt: Option<f64>,
    /// Record every k-th step (plus the initial and final states).
    pub record_every: usize,
    /// Abort when min f < −10⁻³·max f (spectral methods are not
    /// positivity-preserving; this is the health threshold).
    pub positivity_abort: bool,
}

impl Default for EvolveOptions {
    fn default() -> Self {
        EvolveOptions {
            dt: None,
            record_every: 10,
            positivity_abort: true,
        }
    }
}

/// Time series of everything the certificates need.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EvolutionTrace {
    pub times: Vec<f64>,
    pub moment_history: Vec<MomentSet>,
    pub l2_history: Vec<f64>,
    pub min_f_history: Vec<f64>,
    /// log weighted norms, indexed [probe][time].
    pub weighted_log_history: Vec<Vec<f64>>,
    pub probes: Vec<MultiplierSpec>,
    pub initial_l2: f64,
    pub dim: usize,
    pub dt: f64,
}

/// Evolve `f0` to `t_end`, recording probe weighted norms along the way.
/// Returns the final state with its trace.
pub fn evolve(
    f0: &Field,
    t_end: f64,
    probes: &[MultiplierSpec],
    opts: &EvolveOptions,
) -> Result<(Field, EvolutionTrace)> {
    let grid = f0.grid();
    if grid.dim_x() != 0 {
        return Err(CoreError::Configuration(
            "homogeneous solver needs a velocity-only grid".into(),
        ));
    }
    let op = LandauOperator::new(grid);
    let c0 = coefficients_from_state(f0)?;
    let dt_stable = stability_dt(grid, &c0);
    let dt = match opts.dt {
        Some(dt) => {
            if dt > dt_stable {
                return Err(CoreError::CflViolation {
                    dt,
                    limit: dt_stable,
                });
            }
            dt
        }
        None => dt_stable,
    };
    let n_steps = (t_end / dt).ceil() as usize;
    let dt = t_end / n_steps as f64;

    let mut trace = EvolutionTrace {
        times: Vec::new(),
        moment_history: Vec::new(),
        l2_history: Vec::new(),
        min_f_history: Vec::new(),
        weighted_log_history: vec![Vec::new(); probes.len()],
        probes: probes.to_vec(),
        initial_l2: f0.l2_norm(),
        dim: grid.dim_v(),
        dt,
    };

    let mut state = f0.clone();
    record(&op, &state, 0.0, probes, &mut trace)?;

    let mut last_good_t = 0.0;
    for step in 0..n_steps {
        let t = step as f64 * dt;
        state = rk4_step(&op, &state, dt)?;

        let l2 = state.l2_norm();
        if !l2.is_finite() {
            return Err(CoreError::NanAbort {
                t: t + dt,
                last_good_t,
            });
        }
        if opts.positivity_abort {
            let min = state.min_value();
            let max = state.max_value();
            if min < -1e-3 * max {
                return Err(CoreError::Numerical(format!(
                    "positivity health failed at t = {}: min f = {min}, max f = {max}",
                    t + dt
                )));
            }
        }
        last_good_t = t + dt;

        if (step + 1) % opts.record_every == 0 || step + 1 == n_steps {
            record(&op, &state, t + dt, probes, &mut trace)?;
        }
    }
    Ok((state, trace))
}

fn rk4_step(op: &LandauOperator, f: &Field, dt: f64) -> Result<Field> {
    let rhs = |g: &Field| -> Result<Field> {
        let c = coefficients_from_state(g)?;
        Ok(op.collision_rhs(g, &c))
    };
    let k1 = rhs(f)?;
    let k2 = rhs(&axpy(f, &k1, 0.5 * dt))?;
    let k3 = rhs(&axpy(f, &k2, 0.5 * dt))?;
    let k4 = rhs(&axpy(f, &k3, dt))?;

    let mut out = f.clone();
    let w = dt / 6.0;
    let (v, v1, v2, v3, v4) = (
        out.values_mut(),
        k1.values(),
        k2.values(),
        k3.values(),
        k4.values(),
    );
    for i in 0..v.len() {
        v[i] += w * (v1[i] + 2.0 * v2[i] + 2.0 * v3[i] + v4[i]);
    }
    Ok(out)
}

fn axpy(f: &Field, k: &Field, a: f64) -> Field {
    let mut out = f.clone();
    let (v, kv) = (out.values_mut(), k.values());
    for i in 0..v.len() {
        v[i] += a * kv[i];
    }
    out
}

fn record(
    op: &LandauOperator,
    state: &Field,
    t: f64,
    probes: &[MultiplierSpec],
    trace: &mut EvolutionTrace,
) -> Result<()> {
    trace.times.push(t);
    trace.moment_history.push(moments(state)?);
    trace.l2_history.push(state.l2_norm());
    trace.min_f_history.push(state.min_value());
    if !probes.is_empty() {
        let spec = op.forward(state);
        for (i, probe) in probes.iter().enumerate() {
            let (log_w, _) = log_weighted_norm_and_tail(&spec, probe, t);
            trace.weighted_log_history[i].push(log_w);
        }
    }
    Ok(())
}

/// Least-squares decay rate of the directional-temperature gap:
/// fits ln|T₁(t) − T₀/d| over the recorded times, returning the positive
/// rate κ in T₁(t) − T₀/d ∝ e^{−κt}. The moment identity derived from the
/// polynomial coefficients predicts κ = 4d.
pub fn temperature_relaxation_rate(trace: &EvolutionTrace) -> Result<f64> {
    let d = trace.dim as f64;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (t, m) in trace.times.iter().zip(&trace.moment_history) {
        let gap = m.directional_t[0] - m.energy_t0 / d;
        if gap.abs() > 1e-12 {
            xs.push(*t);
            ys.push(gap.abs().ln());
        }
    }
    if xs.len() < 3 {
        return Err(CoreError::Numerical(
            "not enough resolvable temperature-gap samples".into(),
        ));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    Ok(-sxy / sxx)
}

/// Worst per-unit-time drift of the conserved moments over the trace.
pub fn conservation_drift(trace: &EvolutionTrace) -> (f64, f64, f64) {
    let m0 = &trace.moment_history[0];
    let mut worst = (0.0f64, 0.0f64, 0.0f64);
    for (t, m) in trace.times.iter().zip(&trace.moment_history).skip(1) {
        if *t == 0.0 {
            continue;
        }
        let mass = (m.mass - m0.mass).abs() / t;
        let mom = m
            .momentum
            .iter()
            .zip(&m0.momentum)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max)
            / t;
        let energy = (m.energy_t0 - m0.energy_t0).abs() / t;
        worst = (worst.0.max(mass), worst.1.max(mom), worst.2.max(energy));
    }
    worst
}
