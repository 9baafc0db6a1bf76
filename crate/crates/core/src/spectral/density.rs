//! Arrival-time densities built from the spectral projection amplitudes.
//!
//! The density at detector X splits by direction of approach,
//!
//! ```text
//! π(T; X) = π₊(T; X) + π₋(T; X),     π_±(T; X) = |A_±(T; X)|²,
//! ```
//!
//! with `A_±` the projection amplitudes of [`super::projection`]. For a
//! normalized state, integrating π over all T (and adding the never-detected
//! remainder) accounts for unit probability.

use crate::core::{MomentumState, PhysicalParams};
use crate::error::{Error, Result};
use crate::spectral::projection::ProjectionPlan;
use crate::spectral::regulator::{Regulator, Sign};

/// Directional densities at a single (T, X).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityPoint {
    /// Density of arrivals moving rightward (k > 0).
    pub plus: f64,
    /// Density of arrivals moving leftward (k < 0).
    pub minus: f64,
}

impl DensityPoint {
    /// Total arrival density π = π₊ + π₋.
    pub fn total(&self) -> f64 {
        self.plus + self.minus
    }
}

/// One sweep sample: the densities at arrival time `time`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityRow {
    pub time: f64,
    pub plus: f64,
    pub minus: f64,
}

impl DensityRow {
    /// Total arrival density π = π₊ + π₋.
    pub fn total(&self) -> f64 {
        self.plus + self.minus
    }
}

/// An arrival-time density sampled over a time grid at a fixed detector.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrivalDensity {
    detector: f64,
    rows: Vec<DensityRow>,
}

impl ArrivalDensity {
    /// Detector position the density was evaluated at.
    pub fn detector(&self) -> f64 {
        self.detector
    }

    /// The sampled rows, in ascending time order.
    pub fn rows(&self) -> &[DensityRow] {
        &self.rows
    }

    /// The row with the largest total density.
    pub fn peak(&self) -> &DensityRow {
        self.rows
            .iter()
            .max_by(|a, b| a.total().total_cmp(&b.total()))
            .expect("sweeps contain at least two rows")
    }

    /// ∫ π dT over the sampled window.
    pub fn normalization(&self) -> f64 {
        integrate_rows(&self.rows, |r| r.total())
    }

    /// Mean arrival time ⟨T⟩ under the (window-renormalized) density.
    pub fn mean_time(&self) -> f64 {
        let z = self.normalization();
        integrate_rows(&self.rows, |r| r.time * r.total()) / z
    }

    /// Standard deviation of the arrival time under the density.
    pub fn std_time(&self) -> f64 {
        let z = self.normalization();
        let mean = integrate_rows(&self.rows, |r| r.time * r.total()) / z;
        let second = integrate_rows(&self.rows, |r| r.time * r.time * r.total()) / z;
        (second - mean * mean).max(0.0).sqrt()
    }
}

/// Integrates `f(row)` over the row time grid: composite Simpson when the
/// grid is uniform, trapezoid otherwise.
fn integrate_rows(rows: &[DensityRow], f: impl Fn(&DensityRow) -> f64) -> f64 {
    let n = rows.len();
    if n < 2 {
        return 0.0;
    }
    let h = rows[1].time - rows[0].time;
    let uniform = rows
        .windows(2)
        .all(|w| ((w[1].time - w[0].time) - h).abs() <= 1e-9 * h.abs().max(1e-300));
    if uniform && n >= 3 {
        let vals: Vec<f64> = rows.iter().map(&f).collect();
        crate::numeric::simpson_uniform(&vals, h)
    } else {
        let mut acc = 0.0;
        for w in rows.windows(2) {
            acc += 0.5 * (w[1].time - w[0].time) * (f(&w[0]) + f(&w[1]));
        }
        acc
    }
}

/// Arrival-time density at a single (T, X).
pub fn arrival_density(
    state: &MomentumState,
    t: f64,
    detector: f64,
    r: &Regulator,
    params: &PhysicalParams,
) -> Result<DensityPoint> {
    let plus = ProjectionPlan::new(state, Sign::Plus, detector, r, params)?.amplitude(t)?;
    let minus = ProjectionPlan::new(state, Sign::Minus, detector, r, params)?.amplitude(t)?;
    Ok(DensityPoint {
        plus: plus.norm_sqr(),
        minus: minus.norm_sqr(),
    })
}

/// Density sweep over a strictly ascending time grid at one detector.
///
/// Builds each directional projection plan once and reuses it across the
/// sweep, so the cost is O(n_T · n_u) complex multiplies after setup.
pub fn density_sweep(
    state: &MomentumState,
    times: &[f64],
    detector: f64,
    r: &Regulator,
    params: &PhysicalParams,
) -> Result<ArrivalDensity> {
    if times.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "density sweep needs at least 2 times, got {}",
            times.len()
        )));
    }
    if times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter(
            "density sweep times must be strictly ascending".into(),
        ));
    }
    let plus = ProjectionPlan::new(state, Sign::Plus, detector, r, params)?;
    let minus = ProjectionPlan::new(state, Sign::Minus, detector, r, params)?;
    let mut rows = Vec::with_capacity(times.len());
    for &t in times {
        rows.push(DensityRow {
            time: t,
            plus: plus.amplitude(t)?.norm_sqr(),
            minus: minus.amplitude(t)?.norm_sqr(),
        });
    }
    Ok(ArrivalDensity {
        detector,
        rows,
    })
}

/// ∫ π(T; X) dT over [t_min, t_max] with an n-node Simpson rule.
///
/// Returns 0 for an empty window (t_min == t_max).
pub fn total_arrival_probability(
    state: &MomentumState,
    detector: f64,
    r: &Regulator,
    params: &PhysicalParams,
    t_min: f64,
    t_max: f64,
    n: usize,
) -> Result<f64> {
    if t_min == t_max {
        return Ok(0.0);
    }
    if t_min > t_max {
        return Err(Error::InvalidParameter(format!(
            "time window is reversed: [{t_min}, {t_max}]"
        )));
    }
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "total arrival probability needs ≥ 3 nodes, got {n}"
        )));
    }
    let step = (t_max - t_min) / (n - 1) as f64;
    let times: Vec<f64> = (0..n).map(|j| t_min + j as f64 * step).collect();
    let sweep = density_sweep(state, &times, detector, r, params)?;
    Ok(sweep.normalization())
}
