//! Probability current through a fixed position, its window integrals, and
//! the two routes to the current-based mean arrival time.

use num_complex::Complex64;

use crate::core::{MomentumState, PhysicalParams};
use crate::current::wave::{derivative_on_grid, position_moments, PositionWave, SynthesizedWave};
use crate::error::{Error, Result};
use crate::numeric::simpson_uniform;

/// Left-moving probability above which the current-based arrival moments are
/// refused: the flux through the detector then counts crossings in both
/// directions and stops being an arrival distribution.
pub const LEFT_MASS_LIMIT: f64 = 1e-8;

/// Probability current j(x, t) = (ħ/m)·Im(ψ̄·∂ₓψ) — the *net* flux through
/// x, positive rightward; not positive definite for mixed-direction states.
pub fn current_density<W: PositionWave + ?Sized>(wave: &W, x: f64, t: f64) -> f64 {
    let ps = wave.physical_params();
    let psi = wave.value(x, t);
    let dpsi = wave.derivative_x(x, t);
    ps.hbar / ps.mass * (psi.conj() * dpsi).im
}

/// ∫_{t1}^{t2} j(x, t) dt by adaptive composite Simpson (interval count
/// doubled until two successive levels agree); equals the drop in
/// probability left of x between the two instants.
pub fn flux_window<W: PositionWave + ?Sized>(
    wave: &W,
    x: f64,
    t1: f64,
    t2: f64,
) -> Result<f64> {
    if !(t1.is_finite() && t2.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "flux window must be finite, got [{t1}, {t2}]"
        )));
    }
    if t1 > t2 {
        return Err(Error::InvalidParameter(format!(
            "flux window must have t1 ≤ t2, got [{t1}, {t2}]"
        )));
    }
    if t1 == t2 {
        return Ok(0.0);
    }
    adaptive_simpson(|t| current_density(wave, x, t), t1, t2)
}

/// Composite Simpson with interval doubling: 1024 → 2048 → … intervals until
/// two levels agree to 1e−9 relative (1e−11 absolute floor).
fn adaptive_simpson(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<f64> {
    let mut n = 1025_usize;
    let mut prev = f64::NAN;
    loop {
        let h = (hi - lo) / (n - 1) as f64;
        let vals: Vec<f64> = (0..n).map(|j| f(lo + j as f64 * h)).collect();
        let integral = simpson_uniform(&vals, h);
        if prev.is_finite() && (integral - prev).abs() <= 1e-11 + 1e-9 * integral.abs() {
            return Ok(integral);
        }
        if n >= 16385 {
            // Last refinement disagreed beyond tolerance: the integrand is
            // rougher than any state this crate produces; report it.
            return Err(Error::NoConvergence {
                levels: 5,
                residual: (integral - prev).abs(),
                tolerance: 1e-11 + 1e-9 * integral.abs(),
            });
        }
        prev = integral;
        n = 2 * (n - 1) + 1;
    }
}

/// Shared admissibility checks for the arrival-moment routes.
fn ensure_arrival_admissible(state: &MomentumState) -> Result<()> {
    let left = state.left_mass();
    if left > LEFT_MASS_LIMIT {
        return Err(Error::UnsupportedState {
            left_mass: left,
            limit: LEFT_MASS_LIMIT,
        });
    }
    ensure_vanishes_quadratically(state)
}

/// Numerical stand-in for the small-k premise ψ(k) → k^{2+}: at the two
/// smallest positive-momentum nodes carrying non-negligible amplitude
/// (|ψ| > 1e−12·max), the ratio r(k) = |ψ(k)|/k² must not grow into the
/// origin faster than 1.5× between them — for |ψ| ∝ k^p the ratio of ratios
/// is (k₂/k₁)^{2−p}, so this admits p ⪆ 2 and rejects slower decay. States
/// with no amplitude near k = 0 pass vacuously.
pub(crate) fn ensure_vanishes_quadratically(state: &MomentumState) -> Result<()> {
    let nodes = state.grid().nodes();
    let psi = state.amplitudes();
    let floor = 1e-12 * psi.iter().map(|a| a.norm()).fold(0.0_f64, f64::max);
    let mut near: Vec<(f64, f64)> = Vec::new();
    for (j, &k) in nodes.iter().enumerate() {
        if k > 0.0 && psi[j].norm() > floor {
            near.push((k, psi[j].norm() / (k * k)));
            if near.len() == 2 {
                break;
            }
        }
    }
    if let [(k1, r1), (k2, r2)] = near[..] {
        if r1 > 1.5 * r2 {
            return Err(Error::InvalidParameter(format!(
                "state must vanish at least quadratically as k→0+: \
                 |ψ|/k² grows from {r2:.3e} at k={k2:.3e} to {r1:.3e} at k={k1:.3e}"
            )));
        }
    }
    Ok(())
}

/// Classical-estimate window for the arrival-time distribution at detector
/// `x`: center m(x−⟨x⟩₀)/(ħ⟨k⟩), and one standard deviation of the
/// crossing time inferred from the spatial spread at the crossing.
pub(crate) fn arrival_window(state: &MomentumState, x: f64, params: &PhysicalParams) -> (f64, f64) {
    let (k_mean, k_sd) = state.momentum_moments();
    let (x_mean, x_sd) = position_moments(state);
    let v = params.hbar * k_mean / params.mass;
    let t_star = (x - x_mean) / v;
    let spread_at_crossing = (x_sd * x_sd
        + (params.hbar * t_star * k_sd / params.mass).powi(2))
    .sqrt();
    let sigma_t = spread_at_crossing / v.abs();
    (t_star, sigma_t)
}

/// Mean arrival time ⟨T⟩ = ∫ T·j(x, T) dT over the window
/// [T* − 10σ_T, T* + 10σ_T] around the classical crossing — the
/// current-based arrival expectation, defined for right-moving states whose
/// flux is an arrival distribution.
pub fn mean_arrival_from_current(
    state: &MomentumState,
    x: f64,
    params: &PhysicalParams,
) -> Result<f64> {
    params.validate()?;
    ensure_arrival_admissible(state)?;
    let (t_star, sigma_t) = arrival_window(state, x, params);
    let wave = SynthesizedWave::new(state, params);
    adaptive_simpson(
        |t| t * current_density(&wave, x, t),
        t_star - 10.0 * sigma_t,
        t_star + 10.0 * sigma_t,
    )
}

/// The symmetric-ordering arrival expectation
///
/// ```text
/// ⟨T⟩ = (m/ħ)·Re ∫₀^∞ ψ̄(k)·(x/k − (i/k)·∂ₖ)ψ(k) dk,
/// ```
///
/// the momentum-space quantization of the classical m(x−x₀)/p with the
/// operator ordering symmetrized. ∂ₖ is evaluated at stencil orders 2, 4
/// and 6; the value returned is the 6th-order one, with the lower orders
/// exposed so tests can verify the refinement has converged.
pub fn symmetric_ordering_expectation(
    state: &MomentumState,
    x: f64,
    params: &PhysicalParams,
) -> Result<f64> {
    Ok(symmetric_ordering_refinements(state, x, params)?[2])
}

/// The order-2, order-4 and order-6 evaluations behind
/// [`symmetric_ordering_expectation`].
pub fn symmetric_ordering_refinements(
    state: &MomentumState,
    x: f64,
    params: &PhysicalParams,
) -> Result<[f64; 3]> {
    params.validate()?;
    ensure_arrival_admissible(state)?;
    let nodes = state.grid().nodes();
    let psi = state.amplitudes();
    let h = state.grid().step();
    let n = psi.len();
    let mut out = [0.0_f64; 3];
    for (slot, order) in [2_usize, 4, 6].into_iter().enumerate() {
        let dpsi = derivative_on_grid(psi, h, order);
        let mut acc = Complex64::default();
        for j in 0..n {
            let k = nodes[j];
            if k <= 0.0 {
                continue;
            }
            let w = if j == 0 || j + 1 == n { 0.5 * h } else { h };
            let action = x / k * psi[j] - Complex64::new(0.0, 1.0) / k * dpsi[j];
            acc += w * psi[j].conj() * action;
        }
        out[slot] = params.mass / params.hbar * acc.re;
    }
    Ok(out)
}
