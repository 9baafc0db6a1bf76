//! Named end-to-end self-checks: each one exercises a production route
//! against an independent reference and reports a measured error against a
//! fixed tolerance. The CLI's `validate` command prints these; the same
//! checks guard refactors from inside the test suite.

use crate::core::{GaussianPacket, MomentumGrid, MomentumState, PhysicalParams};
use crate::current::{
    arrival_window, flux_window, mean_arrival_from_current, symmetric_ordering_expectation,
    SynthesizedWave,
};
use crate::error::Result;
use crate::oracle::{dense_projection, OracleConfig};
use crate::spectral::{project, total_arrival_probability, Regulator, Sign};
use crate::uncertainty::time_energy_product;

/// Result of one named self-check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    /// Stable check identifier (one of [`CHECK_NAMES`]).
    pub name: &'static str,
    /// Whether `measured` met `tolerance`.
    pub passed: bool,
    /// The check's error measure (smaller is better; NaN if the check
    /// errored before producing a number).
    pub measured: f64,
    /// Largest acceptable `measured`.
    pub tolerance: f64,
    /// Human-readable context: what was compared, or the error that
    /// prevented comparison.
    pub detail: String,
}

/// The checks run by [`run_checks`], in execution order.
pub const CHECK_NAMES: [&str; 6] = [
    "projection_oracle_agreement",
    "flux_conservation",
    "route_equivalence",
    "epsilon_independence",
    "completeness",
    "uncertainty_bound",
];

const PROJECTION_TOL: f64 = 1e-8;
const FLUX_TOL: f64 = 1e-6;
const ROUTE_TOL: f64 = 1e-6;
const EPSILON_TOL: f64 = 1e-10;
const COMPLETENESS_TOL: f64 = 1e-3;
const UNCERTAINTY_TOL: f64 = 1e-9;

/// Runs every self-check for one packet/grid/detector configuration.
///
/// The grid is the production grid under test: checks that compare against
/// grid-independent references (closed forms, the coarse-grid-refusing
/// oracle) will fail honestly when it is too coarse. Check errors are
/// reported as failed outcomes, never panics.
pub fn run_checks(
    packet: &GaussianPacket,
    grid: &MomentumGrid,
    detector: f64,
) -> Vec<CheckOutcome> {
    let r = match Regulator::from_params(&packet.params) {
        Ok(r) => r,
        Err(e) => {
            return CHECK_NAMES
                .iter()
                .map(|name| failed(name, f64::NAN, 0.0, format!("invalid regulator: {e}")))
                .collect()
        }
    };
    let state = match packet.discretize(grid) {
        Ok(s) => s,
        Err(e) => {
            return CHECK_NAMES
                .iter()
                .map(|name| failed(name, f64::NAN, 0.0, format!("state construction: {e}")))
                .collect()
        }
    };
    vec![
        outcome(
            CHECK_NAMES[0],
            PROJECTION_TOL,
            projection_oracle_agreement(packet, grid, detector, &r),
        ),
        outcome(
            CHECK_NAMES[1],
            FLUX_TOL,
            flux_conservation(packet, &state, detector),
        ),
        outcome(
            CHECK_NAMES[2],
            ROUTE_TOL,
            route_equivalence(&state, detector, &packet.params),
        ),
        outcome(
            CHECK_NAMES[3],
            EPSILON_TOL,
            epsilon_independence(&state, detector, &packet.params),
        ),
        outcome(
            CHECK_NAMES[4],
            COMPLETENESS_TOL,
            completeness(packet, grid, detector, &r, &packet.params),
        ),
        outcome(
            CHECK_NAMES[5],
            UNCERTAINTY_TOL,
            uncertainty_bound(&state, detector, &r, &packet.params),
        ),
    ]
}

fn outcome(name: &'static str, tolerance: f64, res: Result<(f64, String)>) -> CheckOutcome {
    match res {
        Ok((measured, detail)) => CheckOutcome {
            name,
            passed: measured.is_finite() && measured <= tolerance,
            measured,
            tolerance,
            detail,
        },
        Err(e) => failed(name, f64::NAN, tolerance, e.to_string()),
    }
}

fn failed(name: &'static str, measured: f64, tolerance: f64, detail: String) -> CheckOutcome {
    CheckOutcome {
        name,
        passed: false,
        measured,
        tolerance,
        detail,
    }
}

/// Times bracketing the classical crossing of `detector`: center and ±5σ.
fn probe_times(state: &MomentumState, detector: f64, params: &PhysicalParams) -> [f64; 3] {
    let (t_star, sigma) = arrival_window(state, detector, params);
    [t_star - 5.0 * sigma, t_star, t_star + 5.0 * sigma]
}

/// Fast projection vs. the extrapolated dense reference, on a 4× refined
/// copy of the production grid (the refinement removes the production
/// grid's own fourth-order quadrature error from the comparison; an
/// under-resolved production grid still fails because the fast path's
/// phase guard trips on the refined copy too).
fn projection_oracle_agreement(
    packet: &GaussianPacket,
    grid: &MomentumGrid,
    detector: f64,
    r: &Regulator,
) -> Result<(f64, String)> {
    let params = &packet.params;
    let fine = MomentumGrid::new(grid.k_min(), grid.k_max(), 4 * (grid.len() - 1) + 1)?;
    let state = packet.discretize(&fine)?;
    let cfg = OracleConfig::default();
    let times = probe_times(&state, detector, params);
    let mut vals = Vec::new();
    for &t in &times {
        // Fast path first: its phase guard gives the actionable diagnosis
        // when the production grid is too coarse.
        let fast = project(&state, t, Sign::Plus, detector, r, params)?;
        let dense = dense_projection(&state, t, Sign::Plus, detector, r, &cfg, params)?;
        vals.push((t, dense, fast));
    }
    let peak = vals.iter().map(|(_, d, _)| d.norm()).fold(0.0, f64::max);
    let mut worst = 0.0_f64;
    for (_, dense, fast) in &vals {
        worst = worst.max((dense - fast).norm() / dense.norm().max(1e-6 * peak));
    }
    Ok((
        worst,
        format!(
            "worst relative gap over T ∈ [{:.4}, {:.4}] at X = {detector}",
            times[0], times[2]
        ),
    ))
}

/// ∫ j dT through the detector vs. the closed-form probability drained
/// from the region left of it.
fn flux_conservation(
    packet: &GaussianPacket,
    state: &MomentumState,
    detector: f64,
) -> Result<(f64, String)> {
    let params = &packet.params;
    let (t_star, sigma) = arrival_window(state, detector, params);
    let (t1, t2) = (t_star - 6.0 * sigma, t_star + 6.0 * sigma);
    let wave = SynthesizedWave::new(state, params);
    let flux = flux_window(&wave, detector, t1, t2)?;
    let drained = packet.cumulative_probability(detector, t1)
        - packet.cumulative_probability(detector, t2);
    Ok((
        (flux - drained).abs(),
        format!("flux {flux:.12} vs closed-form drop {drained:.12} over [{t1:.4}, {t2:.4}]"),
    ))
}

/// Mean arrival time: current-weighted integral vs. the symmetrized
/// momentum-space expectation.
fn route_equivalence(
    state: &MomentumState,
    detector: f64,
    params: &PhysicalParams,
) -> Result<(f64, String)> {
    let from_current = mean_arrival_from_current(state, detector, params)?;
    let from_ordering = symmetric_ordering_expectation(state, detector, params)?;
    // Normalize by the crossing-time spread when ⟨T⟩ itself is near zero
    // (detector at the packet center), so the measure stays meaningful.
    let (_, sigma) = arrival_window(state, detector, params);
    let rel = (from_current - from_ordering).abs() / from_ordering.abs().max(sigma);
    Ok((
        rel,
        format!("⟨T⟩ = {from_current:.12} (current) vs {from_ordering:.12} (ordering)"),
    ))
}

/// Arrival densities across three regulator scales; for states supported
/// away from k = 0 the scale enters only as a constant phase, so the
/// densities must agree to roundoff.
fn epsilon_independence(
    state: &MomentumState,
    detector: f64,
    params: &PhysicalParams,
) -> Result<(f64, String)> {
    let times = probe_times(state, detector, params);
    let scales = [1e-4, 1e-3, 1e-2];
    let mut worst = 0.0_f64;
    for &t in &times {
        let mut densities = Vec::new();
        for &eps in &scales {
            let r = Regulator::new(eps)?;
            let plus = project(state, t, Sign::Plus, detector, &r, params)?;
            let minus = project(state, t, Sign::Minus, detector, &r, params)?;
            densities.push(plus.norm_sqr() + minus.norm_sqr());
        }
        for pair in densities.windows(2) {
            worst = worst.max((pair[1] - pair[0]).abs() / pair[0].max(1e-300));
        }
    }
    Ok((
        worst,
        format!("worst relative density spread across ε ∈ {scales:?}"),
    ))
}

/// Arrival mass over a window generously covering the crossing. The wide
/// window's far-|T| phases need roughly twice the production resolution,
/// so the integral runs on a 2× refined copy of the grid (still coarse
/// enough to fail honestly when the production grid is badly sized).
fn completeness(
    packet: &GaussianPacket,
    grid: &MomentumGrid,
    detector: f64,
    r: &Regulator,
    params: &PhysicalParams,
) -> Result<(f64, String)> {
    let fine = MomentumGrid::new(grid.k_min(), grid.k_max(), 2 * (grid.len() - 1) + 1)?;
    let state = packet.discretize(&fine)?;
    let (t_star, sigma) = arrival_window(&state, detector, params);
    let (lo, hi) = (
        (t_star - 20.0 * sigma).min(-1.0),
        (t_star + 20.0 * sigma).max(2.0),
    );
    let n = 3001;
    let mass = total_arrival_probability(&state, detector, r, params, lo, hi, n)?;
    Ok((
        (mass - 1.0).abs(),
        format!("∫π dT = {mass:.10} over [{lo:.3}, {hi:.3}]"),
    ))
}

/// Robertson bound shortfall for the time–energy pair (0 when satisfied).
fn uncertainty_bound(
    state: &MomentumState,
    detector: f64,
    r: &Regulator,
    params: &PhysicalParams,
) -> Result<(f64, String)> {
    let rep = time_energy_product(state, detector, r, params)?;
    let shortfall = (rep.robertson_bound - rep.product).max(0.0);
    Ok((
        shortfall,
        format!(
            "ΔT·ΔE = {:.9} against bound {:.9}",
            rep.product, rep.robertson_bound
        ),
    ))
}
