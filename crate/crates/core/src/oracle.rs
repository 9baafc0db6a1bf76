//! Slow, independent reference evaluations used to certify the fast paths.
//!
//! The projection pipeline in [`crate::spectral`] changes variables to
//! u = k²/2 and integrates with a phase-interpolating rule; the oracle here
//! does none of that. It evaluates ∫ conj(g(k))·ψ(k) dk as plain trapezoid
//! sums in k on the state's own nodes, then certifies the value by
//! coarsening the grid and extrapolating the step → 0 limit. Agreement
//! between the two is evidence for both, which is the entire point: the
//! oracle shares only the defining formulas (eigenfunction, regulator
//! geometry) with the production code, never its quadrature machinery.

use num_complex::Complex64;
use statrs::function::erf::erfc;

use crate::core::{GaussianPacket, MomentumState, PhysicalParams};
use crate::error::{Error, Result};
use crate::spectral::{eigenstate_value, Regulator, Sign, ToaEigenstate};

/// Budget and certificate threshold for the reference quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Maximum number of coarsening levels in the extrapolation ladder
    /// (must be ≥ 2 — certification needs at least one level difference).
    pub refinement_levels: usize,
    /// Absolute agreement between successive extrapolants that certifies
    /// convergence.
    pub abs_tolerance: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            refinement_levels: 6,
            abs_tolerance: 1e-12,
        }
    }
}

impl OracleConfig {
    fn validate(&self) -> Result<()> {
        if self.refinement_levels < 2 {
            return Err(Error::InvalidParameter(format!(
                "oracle needs at least 2 refinement levels, got {}",
                self.refinement_levels
            )));
        }
        if !(self.abs_tolerance > 0.0 && self.abs_tolerance.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "oracle tolerance must be positive and finite, got {}",
                self.abs_tolerance
            )));
        }
        Ok(())
    }
}

/// Largest phase advance per quadrature step (radians) at which a coarsened
/// level is still admitted into the extrapolation ladder.
const MAX_STEP_PHASE: f64 = 1.0;

/// Minimum node count a coarsened level must retain.
const MIN_COARSE_NODES: usize = 33;

/// Trapezoid sum over every `stride`-th node (step `stride`·h). The stride
/// must divide the panel count.
fn coarse_trapezoid(values: &[Complex64], h: f64, stride: usize) -> Complex64 {
    let n = values.len();
    let mut acc = Complex64::default();
    let mut j = 0;
    while j < n {
        let w = if j == 0 || j + stride >= n { 0.5 } else { 1.0 };
        acc += w * values[j];
        j += stride;
    }
    acc * (h * stride as f64)
}

/// Largest phase advance between adjacent nodes, measured where the
/// integrand has meaningful magnitude. This is the empirical Nyquist rate
/// that decides which coarsenings are trustworthy.
fn max_step_phase(values: &[Complex64]) -> f64 {
    let floor = 1e-12 * values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let mut worst = 0.0_f64;
    for w in values.windows(2) {
        if w[0].norm() > floor && w[1].norm() > floor {
            worst = worst.max((w[1] * w[0].conj()).arg().abs());
        }
    }
    worst
}

/// Divisors of `panels` in ascending order, keeping at least
/// [`MIN_COARSE_NODES`] nodes per level.
fn coarsening_factors(panels: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for c in 1..=panels {
        if panels % c == 0 && panels / c + 1 >= MIN_COARSE_NODES {
            out.push(c);
        }
    }
    out
}

/// Reference projection amplitude ⟨g(T, sign, X) | ψ⟩ by trapezoid sums in
/// k with Richardson (h²-Neville) extrapolation over admissible grid
/// coarsenings, certified by successive-extrapolant agreement below
/// `cfg.abs_tolerance`.
///
/// Independent of the production pipeline: no u-substitution, no phase
/// interpolation, no resampling. Errors with [`Error::NoConvergence`] when
/// the ladder cannot certify (fewer than two admissible levels, or residual
/// above tolerance after every level).
pub fn dense_projection(
    state: &MomentumState,
    t: f64,
    sign: Sign,
    x: f64,
    r: &Regulator,
    cfg: &OracleConfig,
    params: &PhysicalParams,
) -> Result<Complex64> {
    cfg.validate()?;
    params.validate()?;
    let grid = state.grid();
    let psi = state.amplitudes();
    let h = grid.step();
    let eigen = ToaEigenstate {
        time: t,
        sign,
        detector: x,
        regulator: *r,
    };
    let values: Vec<Complex64> = (0..psi.len())
        .map(|j| eigenstate_value(&eigen, grid.node(j), params).conj() * psi[j])
        .collect();

    let rate = max_step_phase(&values);
    let mut levels: Vec<usize> = coarsening_factors(psi.len() - 1)
        .into_iter()
        .filter(|&c| c as f64 * rate <= MAX_STEP_PHASE)
        .take(cfg.refinement_levels)
        .collect();
    if levels.len() < 2 {
        return Err(Error::NoConvergence {
            levels: levels.len(),
            residual: f64::INFINITY,
            tolerance: cfg.abs_tolerance,
        });
    }
    // Coarsest level first so each Neville diagonal refines the previous.
    levels.reverse();

    // Neville tableau in powers of (c·h)²; diag[i] is the best extrapolant
    // using levels 0..=i.
    let mut steps_sq: Vec<f64> = Vec::with_capacity(levels.len());
    let mut row: Vec<Complex64> = Vec::with_capacity(levels.len());
    let mut previous_diag = Complex64::default();
    let mut residual = f64::INFINITY;
    for (i, &c) in levels.iter().enumerate() {
        let hc = h * c as f64;
        steps_sq.push(hc * hc);
        row.push(coarse_trapezoid(&values, h, c));
        for back in (0..i).rev() {
            let num = steps_sq[i] * row[back] - steps_sq[back] * row[back + 1];
            row[back] = num / (steps_sq[i] - steps_sq[back]);
        }
        let diag = row[0];
        if i > 0 {
            residual = (diag - previous_diag).norm();
            if residual < cfg.abs_tolerance {
                return Ok(diag);
            }
        }
        previous_diag = diag;
    }
    Err(Error::NoConvergence {
        levels: levels.len(),
        residual,
        tolerance: cfg.abs_tolerance,
    })
}

/// Probability mass of a Gaussian packet's momenta below `k_cut`,
/// ∫_{−∞}^{k_cut} |ψ̃(k)|² dk, in closed form: |ψ̃|² is normal with mean k₀
/// and σ = 1/(2δ), so the mass is erfc((k₀ − k_cut)·√2·δ)/2.
pub fn gaussian_tail_mass(p: &GaussianPacket, k_cut: f64) -> f64 {
    0.5 * erfc((p.k0 - k_cut) * std::f64::consts::SQRT_2 * p.delta)
}
