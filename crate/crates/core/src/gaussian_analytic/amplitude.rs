//! Closed-form arrival amplitudes for Gaussian packets.
//!
//! For ψ̃(k) = (2δ²/π)^{1/4}·e^{−(k−k₀)²δ² − ikx₀} the projection integral
//! onto an arrival eigenfunction reduces (with the regulator scale taken to
//! zero) to
//!
//! ```text
//! I(D, B) = ∫₀^∞ √k · e^{−Dk² + Bk} dk
//!         = Γ(3/4)/(2D^{3/4})·Φ(3/4, 1/2, W) + B·Γ(5/4)/(2D^{5/4})·Φ(5/4, 3/2, W),
//! ```
//!
//! with D = δ² + iħT/2m, B = ±(2δ²k₀ + i(X − x₀)) for the right/left
//! amplitude of a right-moving packet, and W = B²/4D. The left amplitude is
//! exponentially small; its two Φ terms then cancel to e^{−2·Re W}, so once
//! Re W is large the evaluation switches to the recessive Tricomi branch
//! I(D, B) = (√π/2)·(4D)^{−3/4}·U(3/4, 1/2, W), which needs no cancellation.
//! Packets with k₀ < 0 are handled by the mirror identity (k → −k) that swaps
//! signs and reflects the detector.

use num_complex::Complex64;

use crate::core::GaussianPacket;
use crate::error::{Error, Result};
use crate::spectral::Sign;

use super::special::{gamma, kummer_phi_with, tricomi_u_asymptotic, SpecialFunctionConfig};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Re W beyond which the recessive amplitude switches from the cancelling
/// Kummer pair to the Tricomi asymptotic branch. Both methods carry ≈ 1e−5
/// relative error right at the seam (losing e^{Re W} to cancellation on one
/// side, optimally-truncated asymptotics on the other) and improve rapidly
/// away from it; the recessive amplitude is physically negligible precisely
/// in the regime where the seam lives.
const RECESSIVE_SWITCH: f64 = 25.0;

/// ∫₀^∞ √k·e^{−Dk²+Bk} dk by the Kummer pair (dominant direction) or the
/// Tricomi branch (recessive direction at large Re W).
fn half_line_integral(d: Complex64, b: Complex64) -> Result<Complex64> {
    let w = b * b / (4.0 * d);
    if w.re > RECESSIVE_SWITCH && b.re < 0.0 {
        let u = tricomi_u_asymptotic(
            Complex64::new(0.75, 0.0),
            Complex64::new(0.5, 0.0),
            w,
        )?;
        return Ok(std::f64::consts::PI.sqrt() / 2.0 * (4.0 * d).powf(-0.75) * u);
    }
    let cfg = SpecialFunctionConfig {
        series_tolerance: 1e-14,
        // Kummer terms peak near n ≈ |z|; leave decay room past the peak.
        max_terms: 500.max((3.0 * w.norm()) as usize + 200),
    };
    let phi_even = kummer_phi_with(
        Complex64::new(0.75, 0.0),
        Complex64::new(0.5, 0.0),
        w,
        &cfg,
    )?;
    let phi_odd = kummer_phi_with(
        Complex64::new(1.25, 0.0),
        Complex64::new(1.5, 0.0),
        w,
        &cfg,
    )?;
    let even = gamma(Complex64::new(0.75, 0.0)) / (2.0 * d.powf(0.75)) * phi_even;
    let odd = b * gamma(Complex64::new(1.25, 0.0)) / (2.0 * d.powf(1.25)) * phi_odd;
    Ok(even + odd)
}

/// Closed-form arrival amplitude ⟨arrival T, `sign`, detector `x` | packet⟩.
///
/// Exact for the idealized (regulator-free) operator; for states resolved
/// away from k = 0 this is also the ε-regulated amplitude to machine
/// precision, which is what the spectral route computes.
pub fn analytic_amplitude(
    p: &GaussianPacket,
    t: f64,
    x: f64,
    sign: Sign,
) -> Result<Complex64> {
    if p.k0 < 0.0 {
        // Mirror k → −k: amp₊(p) = i·amp₋(p̃, −X), amp₋(p) = −i·amp₊(p̃, −X)
        // with p̃ = (−x₀, −k₀, δ). The constant i is the left-movers'
        // principal-root normalization phase.
        let mirrored = GaussianPacket::with_params(-p.x0, -p.k0, p.delta, p.params)?;
        return Ok(match sign {
            Sign::Plus => I * analytic_amplitude(&mirrored, t, -x, Sign::Minus)?,
            Sign::Minus => -I * analytic_amplitude(&mirrored, t, -x, Sign::Plus)?,
        });
    }
    let d = p.complex_width(t);
    let a = Complex64::new(2.0 * p.delta * p.delta * p.k0, x - p.x0);
    let b = match sign {
        Sign::Plus => a,
        Sign::Minus => -a,
    };
    let front = (p.params.hbar / (2.0 * std::f64::consts::PI * p.params.mass)).sqrt()
        * (2.0 * p.delta * p.delta / std::f64::consts::PI).powf(0.25)
        * (-p.delta * p.delta * p.k0 * p.k0).exp();
    let phase = match sign {
        Sign::Plus => Complex64::new(1.0, 0.0),
        Sign::Minus => -I,
    };
    Ok(phase * front * half_line_integral(d, b)?)
}

/// First-order stationary-phase approximation to the right amplitude of a
/// fast packet (k₀δ ≫ 1):
///
/// ```text
/// ψ⁺(T, X) ≈ √(ħk₀/m)·(δ²/π)^{1/4}·2^{−1/4}·D^{−1/2}
///            · e^{i(k₀y − ħTk₀²/2m)} · e^{−u²/4D} · (1 + iu/(4k₀D)),
/// ```
///
/// with y = X − x₀ and u = y − ħTk₀/m the distance from the classical
/// trajectory. The neglected remainder is O(1/(k₀δ)²).
pub fn approx_amplitude(p: &GaussianPacket, t: f64, x: f64) -> Result<Complex64> {
    if p.k0 <= 0.0 {
        return Err(Error::NonpositiveMomentum { k: p.k0 });
    }
    let ps = &p.params;
    let d = p.complex_width(t);
    let y = x - p.x0;
    let u = y - ps.hbar * t * p.k0 / ps.mass;
    let front = (ps.hbar * p.k0 / ps.mass).sqrt()
        * (p.delta * p.delta / std::f64::consts::PI).powf(0.25)
        * 2.0_f64.powf(-0.25);
    let plane = Complex64::from_polar(
        1.0,
        p.k0 * y - ps.hbar * t * p.k0 * p.k0 / (2.0 * ps.mass),
    );
    let envelope = (-(u * u) / (4.0 * d)).exp();
    let correction = Complex64::new(1.0, 0.0) + I * u / (4.0 * p.k0 * d);
    Ok(front * d.powf(-0.5) * plane * envelope * correction)
}

/// First-order arrival density of a fast packet: a Gaussian ride along the
/// classical trajectory,
///
/// ```text
/// π(T; X) ≈ (ħ/m)·(k₀δ² + (X−x₀)·Tħ/4mδ²) / (√(2π)·S(T)³) · e^{−u²/2S(T)²},
/// ```
///
/// with S(T) = δ·√(1 + (ħT/2mδ²)²) the spread grown by dispersion. This is
/// simultaneously the exact Schrödinger current of the same packet, which is
/// the content of the current-vs-operator comparison.
pub fn approx_density(p: &GaussianPacket, t: f64, x: f64) -> f64 {
    let ps = &p.params;
    let dd = p.delta * p.delta;
    let tau = ps.hbar * t / (2.0 * ps.mass * dd);
    let s2 = dd * (1.0 + tau * tau);
    let u = (x - p.x0) - ps.hbar * t * p.k0 / ps.mass;
    let numerator = p.k0 * dd + (x - p.x0) * t * ps.hbar / (4.0 * ps.mass * dd);
    ps.hbar / ps.mass * numerator / ((2.0 * std::f64::consts::PI).sqrt() * s2.powf(1.5))
        * (-(u * u) / (2.0 * s2)).exp()
}
