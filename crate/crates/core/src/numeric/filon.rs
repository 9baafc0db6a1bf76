//! Filon–Simpson quadrature for ∫ w(u)·e^{iωu} du on a uniform grid.
//!
//! Classic Filon idea: fit the slowly varying weight w(u) with a piecewise
//! quadratic (as in Simpson's rule) and integrate the quadratic against the
//! oscillatory kernel e^{iωu} *exactly* via closed-form moments. The accuracy
//! is then governed by how well the quadratic captures w alone — independent
//! of ω — so the step size only needs to resolve the weight, not the phase.
//!
//! Moments over a two-interval cell, mapped to s ∈ [−1, 1] with θ = ωh:
//!   A₀ = ∫ e^{iθs} ds        = 2 sin θ / θ
//!   A₁ = ∫ s·e^{iθs} ds      = 2i (sin θ/θ² − cos θ/θ)
//!   A₂ = ∫ s²·e^{iθs} ds     = 2 ((θ²−2) sin θ/θ³ + 2 cos θ/θ²)
//! with Taylor fallbacks below |θ| ≈ 0.2 where the closed forms cancel.
//! At θ = 0 the rule reduces identically to composite Simpson.

use num_complex::Complex64;

/// How often the running phase factor is recomputed from scratch to stop
/// recurrence rounding from accumulating.
const PHASE_RENORM_PERIOD: usize = 256;

/// Reusable description of a uniform quadrature grid for Filon integration.
///
/// The weight samples are supplied per call, so one plan serves a whole sweep
/// of kernel frequencies ω (e.g. a time sweep where ω ∝ T but the weight is
/// time-independent).
#[derive(Debug, Clone)]
pub struct FilonPlan {
    u0: f64,
    h: f64,
    n: usize,
}

impl FilonPlan {
    /// Creates a plan over `[u0, u0 + (n−1)·h]`.
    ///
    /// # Panics
    /// Panics unless `n` is odd and ≥ 3 (pairs of intervals) and `h > 0`.
    pub fn new(u0: f64, h: f64, n: usize) -> Self {
        assert!(n >= 3 && n % 2 == 1, "Filon grid needs an odd node count >= 3");
        assert!(h > 0.0, "Filon step must be positive");
        Self { u0, h, n }
    }

    /// Number of grid nodes.
    pub fn len(&self) -> usize {
        self.n
    }

    /// True if the plan holds no interior cells (cannot happen by construction).
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid step.
    pub fn step(&self) -> f64 {
        self.h
    }

    /// The grid abscissae, for sampling the weight.
    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.u0 + i as f64 * self.h).collect()
    }

    /// Integrates `∫ w(u)·e^{iωu} du` over the plan's span given the weight
    /// samples at the plan's nodes.
    pub fn integrate(&self, weight: &[Complex64], omega: f64) -> Complex64 {
        assert_eq!(weight.len(), self.n, "weight samples must match plan nodes");
        let theta = omega * self.h;
        let (b_left, b_mid, b_right) = basis_moments(theta);

        let pairs = (self.n - 1) / 2;
        let step_phase = Complex64::from_polar(1.0, 2.0 * omega * self.h);
        let mut acc = Complex64::default();
        let mut phase = Complex64::default();
        for j in 0..pairs {
            if j % PHASE_RENORM_PERIOD == 0 {
                let u_c = self.u0 + (2 * j + 1) as f64 * self.h;
                phase = Complex64::from_polar(1.0, omega * u_c);
            } else {
                phase *= step_phase;
            }
            let cell =
                weight[2 * j] * b_left + weight[2 * j + 1] * b_mid + weight[2 * j + 2] * b_right;
            acc += phase * cell;
        }
        acc * self.h
    }
}

/// Integrals of the three quadratic Lagrange basis functions on s ∈ [−1,1]
/// against e^{iθs}: (∫L₋₁, ∫L₀, ∫L₊₁) with L₋₁ = s(s−1)/2, L₀ = 1−s²,
/// L₊₁ = s(s+1)/2.
fn basis_moments(theta: f64) -> (Complex64, Complex64, Complex64) {
    let (a0, a1, a2) = raw_moments(theta);
    let half = 0.5;
    let b_left = (a2 - a1) * half;
    let b_mid = a0 - a2;
    let b_right = (a2 + a1) * half;
    (b_left, b_mid, b_right)
}

fn raw_moments(theta: f64) -> (Complex64, Complex64, Complex64) {
    if theta.abs() < 0.2 {
        // Taylor forms: the closed forms below cancel to O(θ³) near zero.
        let t2 = theta * theta;
        let a0 = 2.0 * (1.0 - t2 / 6.0 + t2 * t2 / 120.0 - t2 * t2 * t2 / 5040.0
            + t2 * t2 * t2 * t2 / 362_880.0);
        let a1_im = 2.0
            * theta
            * (1.0 / 3.0 - t2 / 30.0 + t2 * t2 / 840.0 - t2 * t2 * t2 / 45_360.0);
        let a2 = 2.0
            * (1.0 / 3.0 - t2 / 10.0 + t2 * t2 / 168.0 - t2 * t2 * t2 / 6480.0
                + t2 * t2 * t2 * t2 / 221_760.0);
        (
            Complex64::new(a0, 0.0),
            Complex64::new(0.0, a1_im),
            Complex64::new(a2, 0.0),
        )
    } else {
        let (s, c) = theta.sin_cos();
        let a0 = 2.0 * s / theta;
        let a1_im = 2.0 * (s / (theta * theta) - c / theta);
        let a2 = 2.0 * (((theta * theta - 2.0) * s) / theta.powi(3) + 2.0 * c / (theta * theta));
        (
            Complex64::new(a0, 0.0),
            Complex64::new(0.0, a1_im),
            Complex64::new(a2, 0.0),
        )
    }
}
