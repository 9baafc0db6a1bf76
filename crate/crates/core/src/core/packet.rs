//! Gaussian wave packets with closed-form momentum and position
//! representations.
//!
//! The momentum amplitude is a Gaussian of width 1/(2δ) centered at k₀ with a
//! plane-wave factor placing the packet at x₀:
//!
//! ```text
//! ψ̃(k) = (2δ²/π)^{1/4} · exp(−(k−k₀)²δ² − i k x₀)
//! ```
//!
//! Free evolution keeps it Gaussian. With the complex width D = δ² + iħt/2m
//! and the linear form A(x) = 2δ²k₀ + i(x − x₀), the position wavefunction is
//! the single-exponential form
//!
//! ```text
//! ψ(x, t) = (δ²/2π)^{1/4} · D^{−1/2} · exp(A(x)²/(4D) − k₀²δ²)
//! ```
//!
//! which is numerically stable (one exponential, no cancelling factors) and
//! makes the spatial derivative trivial: ∂ₓψ = ψ·iA/(2D).
//!
//! The closed forms in this crate assume the packet is well localized in the
//! semiclassical sense: |k₀|·δ ≫ 1 (many de Broglie wavelengths across the
//! envelope) and |x₀| ≫ δ when a detector sits near the origin. All formulas
//! remain exact outside that regime; only their interpretation as "a particle
//! travelling at velocity ħk₀/m" degrades.

use num_complex::Complex64;

use crate::core::grid::MomentumGrid;
use crate::core::params::PhysicalParams;
use crate::core::state::MomentumState;
use crate::error::{Error, Result};

/// Analytic Gaussian packet parameters, with the physical constants they are
/// to be evolved under.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianPacket {
    /// Initial mean position.
    pub x0: f64,
    /// Mean momentum (inverse length; multiply by ħ for momentum units).
    pub k0: f64,
    /// Position-space width at t = 0 (the momentum width is 1/(2δ)).
    pub delta: f64,
    /// Physical constants used by the evolution formulas.
    pub params: PhysicalParams,
}

/// Exact first and second moments of a freely evolving Gaussian packet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PacketMoments {
    /// ⟨x̂⟩(t) = x₀ + ħk₀t/m.
    pub mean_x: f64,
    /// ⟨p̂⟩ = ħk₀ (conserved).
    pub mean_p: f64,
    /// Δx(t) = δ·√(1 + t²ħ²/(4δ⁴m²)) — ballistic spreading.
    pub spread_x: f64,
    /// Δp = ħ/(2δ) (conserved; saturates Δx·Δp = ħ/2 at t = 0).
    pub spread_p: f64,
}

impl GaussianPacket {
    /// Packet with default physical constants (ħ = m = 1, ε = 10⁻³).
    ///
    /// # Panics
    /// Panics if `delta` is not positive and finite ([`GaussianPacket::with_params`]
    /// returns the error instead).
    pub fn new(x0: f64, k0: f64, delta: f64) -> Self {
        Self::with_params(x0, k0, delta, PhysicalParams::default())
            .expect("finite x0/k0 and positive delta")
    }

    /// Validated constructor with explicit physical constants.
    pub fn with_params(x0: f64, k0: f64, delta: f64, params: PhysicalParams) -> Result<Self> {
        params.validate()?;
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "packet width delta must be positive and finite, got {delta}"
            )));
        }
        if !(x0.is_finite() && k0.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "packet center must be finite, got x0={x0}, k0={k0}"
            )));
        }
        Ok(Self {
            x0,
            k0,
            delta,
            params,
        })
    }

    /// Dimensionless localization quality |k₀|·δ; the semiclassical closed
    /// forms and approximations are accurate to O(1/(|k₀|δ)²).
    pub fn momentum_localization(&self) -> f64 {
        self.k0.abs() * self.delta
    }

    /// Complex width D(t) = δ² + iħt/2m governing the evolved envelope.
    pub fn complex_width(&self, t: f64) -> Complex64 {
        Complex64::new(
            self.delta * self.delta,
            self.params.hbar * t / (2.0 * self.params.mass),
        )
    }

    /// Linear form A(x) = 2δ²k₀ + i(x − x₀) appearing in the evolved
    /// exponent; ∂ₓψ = ψ·iA/(2D).
    pub fn linear_form(&self, x: f64) -> Complex64 {
        Complex64::new(2.0 * self.delta * self.delta * self.k0, x - self.x0)
    }

    /// |ψ(x,t)|² in closed form: a normalized Gaussian of width Δx(t)
    /// centered on the classical trajectory.
    pub fn position_density(&self, x: f64, t: f64) -> f64 {
        let m = gaussian_moments(self, t);
        let z = (x - m.mean_x) / m.spread_x;
        (-0.5 * z * z).exp() / ((2.0 * std::f64::consts::PI).sqrt() * m.spread_x)
    }

    /// ∫_{−∞}^{x} |ψ(x′,t)|² dx′ — the probability of lying left of `x`.
    pub fn cumulative_probability(&self, x: f64, t: f64) -> f64 {
        let m = gaussian_moments(self, t);
        let z = (x - m.mean_x) / m.spread_x;
        0.5 * statrs::function::erf::erfc(-z / std::f64::consts::SQRT_2)
    }

    /// Samples the momentum amplitude on a grid and renormalizes, recording
    /// how much probability the grid's span leaves outside.
    ///
    /// Fails with [`Error::GridTooNarrow`] when the grid covers less than
    /// mean ± 6 momentum widths (6/δ) of the packet's support — clipped at
    /// the regulator scale for grids confined to one half-line, where the
    /// excluded tail is part of the construction rather than an accident.
    pub fn discretize(&self, grid: &MomentumGrid) -> Result<MomentumState> {
        let span = 6.0 / self.delta;
        let mut required_lo = self.k0 - span;
        let mut required_hi = self.k0 + span;
        if grid.k_min() > 0.0 {
            required_lo = required_lo.max(self.params.epsilon.min(grid.k_min()));
        }
        if grid.k_max() < 0.0 {
            required_hi = required_hi.min((-self.params.epsilon).max(grid.k_max()));
        }
        let slack = 1e-9 * (1.0 + required_lo.abs().max(required_hi.abs()));
        if required_lo > required_hi
            || grid.k_min() > required_lo + slack
            || grid.k_max() < required_hi - slack
        {
            return Err(Error::GridTooNarrow {
                k_lo: grid.k_min(),
                k_hi: grid.k_max(),
                required_lo,
                required_hi,
            });
        }
        let psi: Vec<Complex64> = grid
            .nodes()
            .iter()
            .map(|&k| gaussian_momentum_amplitude(self, k))
            .collect();
        let truncation = self.tail_mass_below(grid.k_min()) + self.tail_mass_above(grid.k_max());
        MomentumState::with_truncation(grid.clone(), psi, truncation)
    }

    /// Probability carried by momenta below `k_cut` (exact Gaussian tail).
    pub fn tail_mass_below(&self, k_cut: f64) -> f64 {
        // |ψ̃|² is Gaussian with σ_k = 1/(2δ).
        let z = (self.k0 - k_cut) * std::f64::consts::SQRT_2 * self.delta;
        0.5 * statrs::function::erf::erfc(z)
    }

    /// Probability carried by momenta above `k_cut`.
    pub fn tail_mass_above(&self, k_cut: f64) -> f64 {
        let z = (k_cut - self.k0) * std::f64::consts::SQRT_2 * self.delta;
        0.5 * statrs::function::erf::erfc(z)
    }
}

/// Momentum-space amplitude ψ̃(k) = (2δ²/π)^{1/4}·exp(−(k−k₀)²δ² − ikx₀).
pub fn gaussian_momentum_amplitude(p: &GaussianPacket, k: f64) -> Complex64 {
    let d2 = p.delta * p.delta;
    let norm = (2.0 * d2 / std::f64::consts::PI).powf(0.25);
    let dk = k - p.k0;
    norm * (-dk * dk * d2).exp() * Complex64::from_polar(1.0, -k * p.x0)
}

/// Freely evolved position wavefunction ψ(x, t) in the single-exponential
/// closed form (module docs); exactly normalized for every t.
pub fn gaussian_position_wavefunction(p: &GaussianPacket, x: f64, t: f64) -> Complex64 {
    let d2 = p.delta * p.delta;
    let big_d = p.complex_width(t);
    let a = p.linear_form(x);
    let norm = (d2 / (2.0 * std::f64::consts::PI)).powf(0.25);
    let exponent = a * a / (4.0 * big_d) - p.k0 * p.k0 * d2;
    norm * big_d.sqrt().inv() * exponent.exp()
}

/// Exact moments of the evolved packet (module docs give the formulas).
pub fn gaussian_moments(p: &GaussianPacket, t: f64) -> PacketMoments {
    let (hbar, m) = (p.params.hbar, p.params.mass);
    let spreading = t * hbar / (2.0 * p.delta * p.delta * m);
    PacketMoments {
        mean_x: p.x0 + hbar * p.k0 * t / m,
        mean_p: hbar * p.k0,
        spread_x: p.delta * (1.0 + spreading * spreading).sqrt(),
        spread_p: hbar / (2.0 * p.delta),
    }
}
