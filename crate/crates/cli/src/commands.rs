//! Command implementations. Each produces a complete output string; the
//! caller decides whether it lands in a file or on stdout.

use std::fmt::Write as _;

use serde::Serialize;
use toa_core::core::{gaussian_moments, MomentumState};
use toa_core::current::current_comparison;
use toa_core::spectral::{arrival_density, density_sweep};
use toa_core::uncertainty::time_energy_product;
use toa_core::validate::{run_checks, CHECK_NAMES};

use crate::config::Resolved;
use crate::CliError;

/// Fixed sample count across each position-density slice.
const SLICE_POINTS: usize = 2001;
/// Slices span this many packet widths either side of the moving center.
const SLICE_HALF_WIDTH: f64 = 8.0;

/// All floating-point CSV fields use 17 significant digits, enough to
/// round-trip an f64 exactly, so reruns are byte-comparable.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn state_of(run: &Resolved) -> Result<MomentumState, CliError> {
    // Discretization failures (grid missing the packet support, unnormalizable
    // samples) are configuration problems, not runtime ones.
    run.packet
        .discretize(&run.grid)
        .map_err(|e| CliError::Config(e.to_string()))
}

/// Arrival-time density sweep: one block of rows per detector.
pub fn cmd_density(run: &Resolved) -> Result<String, CliError> {
    let state = state_of(run)?;
    let mut out = run.provenance_comments("density");
    out.push_str("detector,T,pi_plus,pi_minus,pi_total\n");
    for &detector in &run.detectors {
        if run.times.len() == 1 {
            let t = run.times[0];
            let point = arrival_density(&state, t, detector, &run.regulator, &run.params)?;
            writeln!(
                out,
                "{},{},{},{},{}",
                num(detector),
                num(t),
                num(point.plus),
                num(point.minus),
                num(point.total())
            )
            .expect("string write cannot fail");
        } else {
            let sweep = density_sweep(&state, &run.times, detector, &run.regulator, &run.params)?;
            for row in sweep.rows() {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    num(detector),
                    num(row.time),
                    num(row.plus),
                    num(row.minus),
                    num(row.total())
                )
                .expect("string write cannot fail");
            }
        }
    }
    Ok(out)
}

/// |ψ(x,t)|² snapshots: one block of rows per sampled time, each spanning
/// the instantaneous packet center ± a fixed number of spreads.
pub fn cmd_position_density(run: &Resolved) -> Result<String, CliError> {
    let mut out = run.provenance_comments("position-density");
    out.push_str("t,x,rho\n");
    for &t in &run.times {
        let moments = gaussian_moments(&run.packet, t);
        let center = moments.mean_x;
        let spread = moments.spread_x;
        let lo = center - SLICE_HALF_WIDTH * spread;
        let step = 2.0 * SLICE_HALF_WIDTH * spread / (SLICE_POINTS - 1) as f64;
        for j in 0..SLICE_POINTS {
            let x = lo + j as f64 * step;
            let rho = run.packet.position_density(x, t);
            writeln!(out, "{},{},{}", num(t), num(x), num(rho))
                .expect("string write cannot fail");
        }
    }
    Ok(out)
}

/// Probability current vs. directional arrival densities at one detector,
/// with the pointwise discrepancy and (optionally) its windowed average.
pub fn cmd_current_compare(run: &Resolved) -> Result<String, CliError> {
    let detector = run.sole_detector("current-compare")?;
    let state = state_of(run)?;
    let cmp = current_comparison(
        &state,
        detector,
        &run.times,
        run.window,
        &run.regulator,
        &run.params,
    )?;
    let mut out = run.provenance_comments("current-compare");
    if cmp.smoothed().is_some() {
        out.push_str("T,j,pi_plus,pi_minus,d,dP_smoothed\n");
    } else {
        out.push_str("T,j,pi_plus,pi_minus,d\n");
    }
    let smoothed = cmp.smoothed();
    for (i, &t) in cmp.times().iter().enumerate() {
        write!(
            out,
            "{},{},{},{},{}",
            num(t),
            num(cmp.current()[i]),
            num(cmp.plus()[i]),
            num(cmp.minus()[i]),
            num(cmp.discrepancy()[i])
        )
        .expect("string write cannot fail");
        if let Some(s) = smoothed {
            write!(out, ",{}", num(s[i])).expect("string write cannot fail");
        }
        out.push('\n');
    }
    Ok(out)
}

/// JSON field names follow the report convention ΔT/ΔE.
#[derive(Serialize)]
struct UncertaintyJson {
    #[serde(rename = "delta_T")]
    delta_t: f64,
    #[serde(rename = "delta_E")]
    delta_e: f64,
    product: f64,
    robertson_bound: f64,
    defect_expectation: f64,
}

/// Time–energy uncertainty report at the first detector, as JSON.
pub fn cmd_uncertainty(run: &Resolved) -> Result<String, CliError> {
    let detector = run.detectors[0];
    let state = state_of(run)?;
    let report = time_energy_product(&state, detector, &run.regulator, &run.params)?;
    let json = UncertaintyJson {
        delta_t: report.delta_t,
        delta_e: report.delta_e,
        product: report.product,
        robertson_bound: report.robertson_bound,
        defect_expectation: report.defect_expectation,
    };
    let mut out = serde_json::to_string_pretty(&json).expect("report serialization cannot fail");
    out.push('\n');
    Ok(out)
}

/// Check names, one per line, without running anything.
pub fn cmd_validate_list() -> (String, bool) {
    let mut out = String::new();
    for name in CHECK_NAMES {
        out.push_str(name);
        out.push('\n');
    }
    (out, true)
}

/// Internal consistency checks. Returns the report and whether all passed.
pub fn cmd_validate(run: &Resolved) -> Result<(String, bool), CliError> {
    let detector = run.detectors[0];
    let outcomes = run_checks(&run.packet, &run.grid, detector);
    let mut out = String::new();
    let mut failures = 0usize;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        if !o.passed {
            failures += 1;
        }
        writeln!(
            out,
            "{status} {name}: measured={measured:.3e} tolerance={tolerance:.3e} — {detail}",
            name = o.name,
            measured = o.measured,
            tolerance = o.tolerance,
            detail = o.detail
        )
        .expect("string write cannot fail");
    }
    if failures == 0 {
        writeln!(out, "all {} checks passed", outcomes.len()).expect("string write cannot fail");
    } else {
        writeln!(out, "{failures} of {} checks failed", outcomes.len())
            .expect("string write cannot fail");
    }
    Ok((out, failures == 0))
}
