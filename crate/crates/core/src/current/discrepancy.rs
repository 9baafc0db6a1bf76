//! The difference between the current through the origin and the net
//! operator arrival density, d(T) = j₀(T) − (π⁺ − π⁻)(T; 0), plus its
//! time-smoothed variant — the quantities that measure how far the two
//! notions of "arrival probability" drift apart at short time scales.

use num_complex::Complex64;

use crate::core::{MomentumState, PhysicalParams};
use crate::current::flux::current_density;
use crate::current::wave::SynthesizedWave;
use crate::error::{Error, Result};
use crate::numeric::resample_uniform;
use crate::spectral::{ProjectionPlan, Regulator, Sign};

/// Arrival densities π^± at a detector on the origin, by direct dense
/// quadrature with the bare √|k| weight on the state's own grid.
///
/// This discretizes identically to the Fourier-synthesized current (same
/// nodes, same trapezoid weights), so the discrepancy below reflects the
/// physics — the interference structure the operator projection removes —
/// rather than mismatched quadrature flavors. The fast projection pipeline
/// reproduces these values to its own quadrature tolerance (≈1e−7
/// relative); the regulator window is immaterial for states with no
/// amplitude at |k| ≤ ε.
fn dense_densities(state: &MomentumState, t: f64, params: &PhysicalParams) -> (f64, f64) {
    let grid = state.grid();
    let psi = state.amplitudes();
    let h = grid.step();
    let n = psi.len();
    let tau = params.hbar * t / (2.0 * params.mass);
    let mut plus = Complex64::default();
    let mut minus = Complex64::default();
    for (j, &amp) in psi.iter().enumerate() {
        let k = grid.node(j);
        if k == 0.0 {
            continue;
        }
        let w = if j == 0 || j + 1 == n { 0.5 * h } else { h };
        let term = w * k.abs().sqrt() * amp * Complex64::from_polar(1.0, -tau * k * k);
        if k > 0.0 {
            plus += term;
        } else {
            minus += term;
        }
    }
    let scale = params.hbar / (2.0 * std::f64::consts::PI * params.mass);
    (scale * plus.norm_sqr(), scale * minus.norm_sqr())
}

/// d(T) = j₀(T) − (π⁺(T; 0) − π⁻(T; 0)) with the detector at the origin
/// (translate the state to move a detector there). Direct-subtraction
/// route; [`discrepancy_double_integral`] evaluates the same quantity by an
/// algebraically independent rearrangement.
pub fn discrepancy(state: &MomentumState, t: f64, params: &PhysicalParams) -> f64 {
    let wave = SynthesizedWave::new(state, params);
    let j = current_density(&wave, 0.0, t);
    let (plus, minus) = dense_densities(state, t, params);
    j - (plus - minus)
}

/// The discrepancy as the explicit double integral over positive momenta,
///
/// ```text
/// d(T) = ħ/(4πm) · Re ∬ dk dk′ (√k − √k′)² e^{−iTħ(k²−k′²)/2m} ψ(k) ψ̄(k′),
/// ```
///
/// evaluated as a literal O(n²) double sum — no factorization into
/// single-integral products — so it cross-checks [`discrepancy`] through
/// entirely different arithmetic. Valid for states supported on k > 0
/// (otherwise j carries left-mover and cross terms the display omits).
pub fn discrepancy_double_integral(
    state: &MomentumState,
    t: f64,
    params: &PhysicalParams,
) -> f64 {
    let grid = state.grid();
    let psi = state.amplitudes();
    let h = grid.step();
    let n = psi.len();
    let tau = params.hbar * t / (2.0 * params.mass);
    // z_j = w_j·ψ(k_j)·e^{−iτk_j²} so the kernel is (√k_j−√k_l)²·Re(z_j·z̄_l).
    let mut roots = Vec::new();
    let mut z = Vec::new();
    for (j, &amp) in psi.iter().enumerate() {
        let k = grid.node(j);
        if k <= 0.0 {
            continue;
        }
        let w = if j == 0 || j + 1 == n { 0.5 * h } else { h };
        roots.push(k.sqrt());
        z.push(w * amp * Complex64::from_polar(1.0, -tau * k * k));
    }
    let m = z.len();
    let mut acc = 0.0;
    for a in 0..m {
        // Diagonal vanishes with the (√k−√k′)² kernel; symmetry doubles the
        // strict upper triangle.
        for b in a + 1..m {
            let s = roots[a] - roots[b];
            acc += 2.0 * s * s * (z[a] * z[b].conj()).re;
        }
    }
    params.hbar / (4.0 * std::f64::consts::PI * params.mass) * acc
}

/// Time-smoothed discrepancy
///
/// ```text
/// ΔP(T, δT) = (1/2δT)∫_{T−δT}^{T+δT} d(T′) dT′
///           = ħ/(4πm)·Re ∬ (√k−√k′)²·sinc(δT·a)·e^{−iTa}·ψψ̄′,
/// ```
///
/// with a = ħ(k²−k′²)/2m — the averaging collapses to a sinc factor under
/// the double integral. δT = 0 reduces to the unsmoothed discrepancy
/// (evaluated by the direct-subtraction route, bit-for-bit). The state is
/// resampled to the coarsest grid that still resolves the kernel's
/// oscillations, keeping the O(n²) sum affordable for sweeps.
pub fn smoothed_discrepancy(
    state: &MomentumState,
    t: f64,
    delta_t: f64,
    params: &PhysicalParams,
) -> Result<f64> {
    if !(delta_t >= 0.0 && delta_t.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "smoothing window must be finite and nonnegative, got {delta_t}"
        )));
    }
    if delta_t == 0.0 {
        return Ok(discrepancy(state, t, params));
    }
    let grid = state.grid();
    let span = grid.k_max() - grid.k_min();
    // Fastest k-oscillation of the kernel row: ħk_max(|T| + δT)/m rad per
    // unit k; a trapezoid-flavored sum needs ≥ 2 samples per radian, with
    // margin for the state's own spatial extent.
    let rate = params.hbar * grid.max_abs_k() / params.mass * (t.abs() + delta_t);
    let required = (span * rate * 2.0 / std::f64::consts::PI).ceil() as usize;
    let mut n = 1025_usize;
    while n - 1 < required && n < 8193 {
        n = 2 * (n - 1) + 1;
    }
    let (nodes, psi, h) = if state.amplitudes().len() <= n {
        (grid.nodes(), state.amplitudes().to_vec(), grid.step())
    } else {
        let h = span / (n - 1) as f64;
        let targets: Vec<f64> = (0..n).map(|j| grid.k_min() + j as f64 * h).collect();
        let resampled = resample_uniform(grid.k_min(), grid.step(), state.amplitudes(), &targets);
        (targets, resampled, h)
    };
    let tau = params.hbar * t / (2.0 * params.mass);
    let freq = params.hbar / (2.0 * params.mass); // a = freq·(k²−k′²)
    let count = nodes.len();
    let mut roots = Vec::new();
    let mut sq = Vec::new();
    let mut z = Vec::new();
    for j in 0..count {
        let k = nodes[j];
        if k <= 0.0 {
            continue;
        }
        let w = if j == 0 || j + 1 == count { 0.5 * h } else { h };
        roots.push(k.sqrt());
        sq.push(k * k);
        z.push(w * psi[j] * Complex64::from_polar(1.0, -tau * k * k));
    }
    let m = z.len();
    let mut acc = 0.0;
    for a in 0..m {
        for b in a + 1..m {
            let s = roots[a] - roots[b];
            let arg = delta_t * freq * (sq[a] - sq[b]);
            let sinc = if arg.abs() < 1e-8 { 1.0 } else { arg.sin() / arg };
            acc += 2.0 * s * s * sinc * (z[a] * z[b].conj()).re;
        }
    }
    Ok(params.hbar / (4.0 * std::f64::consts::PI * params.mass) * acc)
}

/// A current-vs-operator comparison sweep at one detector: the current, the
/// directional operator densities, the discrepancy, and optionally its
/// smoothed form.
#[derive(Debug, Clone, PartialEq)]
pub struct CurrentComparison {
    times: Vec<f64>,
    current: Vec<f64>,
    plus: Vec<f64>,
    minus: Vec<f64>,
    discrepancy: Vec<f64>,
    smoothed: Option<Vec<f64>>,
    window: Option<f64>,
}

impl CurrentComparison {
    /// Validating constructor: all arrays must match `times` in length, and
    /// smoothed samples are present exactly when a window is.
    pub fn new(
        times: Vec<f64>,
        current: Vec<f64>,
        plus: Vec<f64>,
        minus: Vec<f64>,
        discrepancy: Vec<f64>,
        smoothed: Option<Vec<f64>>,
        window: Option<f64>,
    ) -> Result<Self> {
        let n = times.len();
        if current.len() != n || plus.len() != n || minus.len() != n || discrepancy.len() != n {
            return Err(Error::InvalidParameter(format!(
                "comparison arrays must all have {n} samples"
            )));
        }
        match (&smoothed, window) {
            (Some(s), Some(w)) => {
                if s.len() != n {
                    return Err(Error::InvalidParameter(format!(
                        "smoothed array has {} samples, expected {n}",
                        s.len()
                    )));
                }
                if !(w >= 0.0 && w.is_finite()) {
                    return Err(Error::InvalidParameter(format!(
                        "smoothing window must be finite and nonnegative, got {w}"
                    )));
                }
            }
            (None, None) => {}
            _ => {
                return Err(Error::InvalidParameter(
                    "smoothed samples present iff a window is given".into(),
                ));
            }
        }
        Ok(Self {
            times,
            current,
            plus,
            minus,
            discrepancy,
            smoothed,
            window,
        })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    /// j(X, T) samples.
    pub fn current(&self) -> &[f64] {
        &self.current
    }

    /// π⁺(T; X) samples from the production spectral pipeline.
    pub fn plus(&self) -> &[f64] {
        &self.plus
    }

    /// π⁻(T; X) samples from the production spectral pipeline.
    pub fn minus(&self) -> &[f64] {
        &self.minus
    }

    /// (π⁺ − π⁻)(T; X) samples.
    pub fn density_difference(&self) -> Vec<f64> {
        self.plus
            .iter()
            .zip(&self.minus)
            .map(|(p, m)| p - m)
            .collect()
    }

    /// d(T) samples (direct-subtraction route, dense quadrature).
    pub fn discrepancy(&self) -> &[f64] {
        &self.discrepancy
    }

    /// Smoothed-discrepancy samples, when a window was requested.
    pub fn smoothed(&self) -> Option<&[f64]> {
        self.smoothed.as_deref()
    }

    /// The smoothing window the sweep was built with, if any.
    pub fn window(&self) -> Option<f64> {
        self.window
    }
}

/// Builds a [`CurrentComparison`] for a state and detector over a time
/// sweep. The current is evaluated at the detector directly; the
/// discrepancy quantities translate the state so the detector sits at the
/// origin; the net density uses the production projection pipeline.
pub fn current_comparison(
    state: &MomentumState,
    detector: f64,
    times: &[f64],
    window: Option<f64>,
    r: &Regulator,
    params: &PhysicalParams,
) -> Result<CurrentComparison> {
    if times.is_empty() {
        return Err(Error::InvalidParameter(
            "comparison sweep needs at least one time".into(),
        ));
    }
    if !detector.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "detector position must be finite, got {detector}"
        )));
    }
    params.validate()?;
    let wave = SynthesizedWave::new(state, params);
    let translated = state.translated_to_origin(detector);
    let plan_plus = ProjectionPlan::new(state, Sign::Plus, detector, r, params)?;
    let plan_minus = ProjectionPlan::new(state, Sign::Minus, detector, r, params)?;
    let mut current = Vec::with_capacity(times.len());
    let mut plus = Vec::with_capacity(times.len());
    let mut minus = Vec::with_capacity(times.len());
    let mut disc = Vec::with_capacity(times.len());
    let mut smoothed = window.map(|_| Vec::with_capacity(times.len()));
    for &t in times {
        current.push(current_density(&wave, detector, t));
        plus.push(plan_plus.amplitude(t)?.norm_sqr());
        minus.push(plan_minus.amplitude(t)?.norm_sqr());
        disc.push(discrepancy(&translated, t, params));
        if let (Some(out), Some(w)) = (smoothed.as_mut(), window) {
            out.push(smoothed_discrepancy(&translated, t, w, params)?);
        }
    }
    CurrentComparison::new(times.to_vec(), current, plus, minus, disc, smoothed, window)
}
