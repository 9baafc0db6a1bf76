//! Momentum-space eigenfunctions of the regulated arrival-time operator, and
//! their relation to the plane-wave kernel ⟨k|x,t⟩.

use num_complex::Complex64;

use crate::core::PhysicalParams;
use crate::error::{Error, Result};
use crate::spectral::regulator::{regulator_value, z_coordinate, Regulator, Sign};

/// One eigenfunction of the regulated arrival-time operator: arrival time
/// `time`, half-line `sign`, detector at `detector`, regulated at scale
/// `regulator.epsilon`.
///
/// In the momentum representation (support confined to sign·k > 0):
///
/// ```text
/// g(k) = √(ħ/2πm) · f_ε(k)^{−1/2} · exp(i (ħ·time/m) Z_sign(k)) · e^{−ik·detector}
/// ```
///
/// with the principal square root (√x = i√|x| for x < 0, which affects only
/// the left-movers' constant phase, never any density). For |k| ≥ ε the
/// modulus is √(ħ|k|/2πm); the time dependence is a pure phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToaEigenstate {
    /// Arrival-time eigenvalue T.
    pub time: f64,
    /// Half-line (right- or left-moving).
    pub sign: Sign,
    /// Detector position X.
    pub detector: f64,
    /// Regulator defining f_ε and Z±.
    pub regulator: Regulator,
}

/// Principal square root of a real number: √x for x ≥ 0, i√|x| for x < 0.
#[inline]
pub(crate) fn sqrt_principal(x: f64) -> Complex64 {
    if x >= 0.0 {
        Complex64::new(x.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-x).sqrt())
    }
}

/// Evaluates the eigenfunction at momentum `k` (see [`ToaEigenstate`]).
///
/// Returns 0 off the half-line, including at exactly k = 0 (a measure-zero
/// convention keeping the value finite).
pub fn eigenstate_value(e: &ToaEigenstate, k: f64, params: &PhysicalParams) -> Complex64 {
    if e.sign.as_f64() * k <= 0.0 {
        return Complex64::default();
    }
    let z = z_coordinate(&e.regulator, e.sign, k)
        .expect("on-half-line k was just checked");
    let inv_f = 1.0 / regulator_value(&e.regulator, k);
    let norm = (params.hbar / (2.0 * std::f64::consts::PI * params.mass)).sqrt();
    let phase = Complex64::from_polar(
        1.0,
        params.hbar * e.time * z / params.mass - k * e.detector,
    );
    norm * sqrt_principal(inv_f) * phase
}

/// Plane-wave kernel ⟨k|x,t⟩ = √(ħ/2π)·exp(i(ħtk²/2m − kx)): the momentum
/// representation of the position eigenstate |x⟩ evolved backwards to time t.
pub fn position_time_kernel(k: f64, x: f64, t: f64, params: &PhysicalParams) -> Complex64 {
    let norm = (params.hbar / (2.0 * std::f64::consts::PI)).sqrt();
    let phase = params.hbar * t * k * k / (2.0 * params.mass) - k * x;
    norm * Complex64::from_polar(1.0, phase)
}

/// The factor √(k/m) relating right-moving arrival-time eigenfunctions to the
/// plane-wave kernel: in the ε → 0 limit,
/// `eigenstate_value(T,+,X; k) = √(k/m) · ⟨k|x=X, t=T⟩` for k ≥ ε.
///
/// Only defined for right-movers with k > 0.
pub fn time_rep_factor(k: f64, params: &PhysicalParams) -> Result<f64> {
    if k <= 0.0 {
        return Err(Error::NonpositiveMomentum { k });
    }
    Ok((k / params.mass).sqrt())
}
