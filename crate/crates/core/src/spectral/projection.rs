//! Projection of momentum states onto regulated arrival-time eigenfunctions.
//!
//! The amplitude for a state ψ to arrive at detector X at time T moving in
//! direction `sign` is the inner product with the eigenfunction,
//!
//! ```text
//! A_±(T) = ∫ conj(g_{T,±,X}(k))·ψ(k) dk      (over the half-line ±k > 0)
//! ```
//!
//! split into the |k| ≥ ε part — where u = k²/2 makes the evolution phase
//! exactly linear and a Filon rule integrates it frequency-independently —
//! and the |k| < ε remainder in the log coordinate v = ln(ε/|k|), where the
//! regulated phase ε²·v is again exactly linear (and slow). All weights are
//! T-independent, so a [`ProjectionPlan`] amortizes them across time sweeps.

use num_complex::Complex64;

use crate::core::{MomentumState, PhysicalParams};
use crate::error::{Error, Result};
use crate::numeric::{resample_uniform, simpson_uniform, FilonPlan};
use crate::spectral::regulator::{Regulator, Sign};

/// Largest phase advance per momentum-grid step the scheme accepts before
/// reporting the sweep as under-resolved (two samples per oscillation).
const PHASE_LIMIT: f64 = 0.5;

/// u-grid oversampling relative to the state's momentum grid.
const OVERSAMPLE: usize = 4;

/// Node count of the log-coordinate quadrature below the regulator scale.
const STRIP_NODES: usize = 129;

/// Depth cap of the log coordinate: momenta below ε·e^{−40} contribute less
/// than e^{−20} of the (already tiny) strip weight.
const STRIP_V_CAP: f64 = 40.0;

/// A reusable projection: fixed (state, sign, detector, regulator), variable
/// arrival time.
#[derive(Debug, Clone)]
pub struct ProjectionPlan {
    prefactor: Complex64,
    hbar_over_m: f64,
    /// ε²/2 — the Z-offset of the |k| ≥ ε branch.
    eps_half_sq: f64,
    main: Option<MainPart>,
    strip: Option<StripPart>,
    /// Phase advance per grid step per unit |T|.
    guard_rate_per_time: f64,
}

#[derive(Debug, Clone)]
struct MainPart {
    filon: FilonPlan,
    weight: Vec<Complex64>,
}

#[derive(Debug, Clone)]
struct StripPart {
    v_lo: f64,
    step: f64,
    /// ε^{3/2}·e^{−v/2}·ψ(±εe^{−v})·e^{±iXεe^{−v}} at the v-nodes.
    weight: Vec<Complex64>,
    eps_sq: f64,
}

impl ProjectionPlan {
    /// Builds the plan for one (state, sign, detector, regulator) tuple.
    pub fn new(
        state: &MomentumState,
        sign: Sign,
        detector: f64,
        r: &Regulator,
        params: &PhysicalParams,
    ) -> Result<Self> {
        params.validate()?;
        let grid = state.grid();
        let eps = r.epsilon;
        let sigma = sign.as_f64();

        // The half-line's coverage in |k|: [reach_lo, reach_hi].
        let (reach_lo, reach_hi) = match sign {
            Sign::Plus => (grid.k_min().max(0.0), grid.k_max()),
            Sign::Minus => ((-grid.k_max()).max(0.0), -grid.k_min()),
        };

        let norm = (params.hbar / (2.0 * std::f64::consts::PI * params.mass)).sqrt();
        let prefactor = match sign {
            Sign::Plus => Complex64::new(norm, 0.0),
            // conj of the left-movers' principal-root factor i.
            Sign::Minus => Complex64::new(0.0, -norm),
        };

        let mut main = None;
        let mut strip = None;
        if reach_hi > 0.0 {
            let k_lo = reach_lo.max(eps);
            if reach_hi > k_lo {
                let u_lo = k_lo * k_lo / 2.0;
                let u_hi = reach_hi * reach_hi / 2.0;
                let cells = ((reach_hi - k_lo) / grid.step()).ceil().max(1.0) as usize;
                let n_u = 2 * (OVERSAMPLE * cells).div_ceil(2) + 1;
                let filon = FilonPlan::new(u_lo, (u_hi - u_lo) / (n_u - 1) as f64, n_u);
                let targets: Vec<f64> = filon
                    .nodes()
                    .iter()
                    .map(|&u| sigma * (2.0 * u).sqrt())
                    .collect();
                let psi = resample_uniform(grid.k_min(), grid.step(), state.amplitudes(), &targets);
                let weight: Vec<Complex64> = filon
                    .nodes()
                    .iter()
                    .zip(&psi)
                    .map(|(&u, &p)| {
                        let kabs = (2.0 * u).sqrt();
                        p * (2.0 * u).powf(-0.25) * Complex64::from_polar(1.0, sigma * detector * kabs)
                    })
                    .collect();
                main = Some(MainPart { filon, weight });
            }

            // Sub-ε remainder: only present where the grid actually covers it.
            let strip_hi_k = reach_hi.min(eps);
            if strip_hi_k > reach_lo {
                let v_lo = (eps / strip_hi_k).ln().max(0.0);
                let v_hi = if reach_lo > 0.0 {
                    (eps / reach_lo).ln().min(STRIP_V_CAP)
                } else {
                    STRIP_V_CAP
                };
                if v_hi > v_lo {
                    let step = (v_hi - v_lo) / (STRIP_NODES - 1) as f64;
                    let kabs: Vec<f64> = (0..STRIP_NODES)
                        .map(|j| eps * (-(v_lo + j as f64 * step)).exp())
                        .collect();
                    let targets: Vec<f64> = kabs.iter().map(|&ka| sigma * ka).collect();
                    let psi =
                        resample_uniform(grid.k_min(), grid.step(), state.amplitudes(), &targets);
                    let weight: Vec<Complex64> = (0..STRIP_NODES)
                        .map(|j| {
                            let v = v_lo + j as f64 * step;
                            psi[j]
                                * eps.powf(1.5)
                                * (-0.5 * v).exp()
                                * Complex64::from_polar(1.0, sigma * detector * kabs[j])
                        })
                        .collect();
                    strip = Some(StripPart {
                        v_lo,
                        step,
                        weight,
                        eps_sq: eps * eps,
                    });
                }
            }
        }

        Ok(Self {
            prefactor,
            hbar_over_m: params.hbar / params.mass,
            eps_half_sq: eps * eps / 2.0,
            main,
            strip,
            guard_rate_per_time: grid.step() * params.hbar * grid.max_abs_k() / params.mass,
        })
    }

    /// Phase advance per grid step at arrival time `t` (the guard quantity).
    pub fn phase_rate(&self, t: f64) -> f64 {
        self.guard_rate_per_time * t.abs()
    }

    /// Projection amplitude at arrival time `t`.
    ///
    /// Fails with [`Error::PhaseUnderresolved`] when the state's grid cannot
    /// resolve the evolution phase at this |t| (≥ 2 samples per oscillation).
    pub fn amplitude(&self, t: f64) -> Result<Complex64> {
        let rate = self.phase_rate(t);
        if rate > PHASE_LIMIT * (1.0 + 1e-12) {
            return Err(Error::PhaseUnderresolved {
                rate,
                limit: PHASE_LIMIT,
            });
        }
        let omega = self.hbar_over_m * t;
        let mut total = Complex64::default();
        if let Some(m) = &self.main {
            let eps_phase = Complex64::from_polar(1.0, omega * self.eps_half_sq);
            total += eps_phase * m.filon.integrate(&m.weight, -omega);
        }
        if let Some(s) = &self.strip {
            let vals: Vec<Complex64> = s
                .weight
                .iter()
                .enumerate()
                .map(|(j, &w)| {
                    let v = s.v_lo + j as f64 * s.step;
                    w * Complex64::from_polar(1.0, omega * s.eps_sq * v)
                })
                .collect();
            total += simpson_uniform(&vals, s.step);
        }
        Ok(self.prefactor * total)
    }
}

/// One-shot projection ⟨g_{T,sign,X}|ψ⟩ (see module docs). Building a
/// [`ProjectionPlan`] directly is cheaper for sweeps over T.
pub fn project(
    state: &MomentumState,
    t: f64,
    sign: Sign,
    detector: f64,
    r: &Regulator,
    params: &PhysicalParams,
) -> Result<Complex64> {
    ProjectionPlan::new(state, sign, detector, r, params)?.amplitude(t)
}
