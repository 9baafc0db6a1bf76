//! Discretized momentum-space states.

use num_complex::Complex64;

use crate::core::grid::MomentumGrid;
use crate::core::packet::{gaussian_momentum_amplitude, GaussianPacket};
use crate::error::{Error, Result};
use crate::numeric::simpson_uniform;

/// A normalized complex amplitude ψ(k) sampled on a uniform momentum grid.
///
/// Construction renormalizes so ∫|ψ|²dk = 1 on the grid (composite Simpson)
/// and keeps track of the probability mass the grid's span excluded from
/// whatever continuum state the samples came from.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumState {
    grid: MomentumGrid,
    psi: Vec<Complex64>,
    truncation_mass: f64,
}

impl MomentumState {
    /// Builds a state from samples, renormalizing on the grid.
    pub fn new(grid: MomentumGrid, psi: Vec<Complex64>) -> Result<Self> {
        Self::with_truncation(grid, psi, 0.0)
    }

    /// Builds a state from samples with a known excluded-tail mass.
    pub fn with_truncation(
        grid: MomentumGrid,
        psi: Vec<Complex64>,
        truncation_mass: f64,
    ) -> Result<Self> {
        if psi.len() != grid.len() {
            return Err(Error::InvalidParameter(format!(
                "amplitude count {} does not match grid size {}",
                psi.len(),
                grid.len()
            )));
        }
        if psi.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::InvalidParameter(
                "state amplitudes must be finite".into(),
            ));
        }
        let dens: Vec<f64> = psi.iter().map(|a| a.norm_sqr()).collect();
        let raw_norm = simpson_uniform(&dens, grid.step());
        if !(raw_norm.is_finite() && raw_norm > 1e-300) {
            return Err(Error::InvalidParameter(format!(
                "state norm² on the grid is {raw_norm}; cannot normalize"
            )));
        }
        let scale = raw_norm.sqrt().recip();
        let psi = psi.into_iter().map(|a| a * scale).collect();
        Ok(Self {
            grid,
            psi,
            truncation_mass,
        })
    }

    /// Superposition Σᵢ cᵢ·ψᵢ(k) of Gaussian packets sampled on one grid,
    /// renormalized. Used e.g. to build states mixing right- and left-movers.
    pub fn superposition(
        grid: &MomentumGrid,
        components: &[(GaussianPacket, Complex64)],
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter(
                "superposition needs at least one component".into(),
            ));
        }
        let psi: Vec<Complex64> = grid
            .nodes()
            .iter()
            .map(|&k| {
                components
                    .iter()
                    .map(|(p, c)| c * gaussian_momentum_amplitude(p, k))
                    .sum()
            })
            .collect();
        Self::new(grid.clone(), psi)
    }

    /// The sampling grid.
    pub fn grid(&self) -> &MomentumGrid {
        &self.grid
    }

    /// Amplitude samples, node for node with `grid().nodes()`.
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.psi
    }

    /// Probability mass of the original continuum state outside the grid span
    /// (0 for states defined directly by their samples).
    pub fn truncation_mass(&self) -> f64 {
        self.truncation_mass
    }

    /// ∫|ψ|²dk on the grid (1 up to rounding, by construction).
    pub fn norm_squared(&self) -> f64 {
        let dens: Vec<f64> = self.psi.iter().map(|a| a.norm_sqr()).collect();
        simpson_uniform(&dens, self.grid.step())
    }

    /// Probability carried by non-positive momenta, ∫_{k≤0}|ψ|²dk on the
    /// grid's nodes (left-movers plus the measure-zero k = 0 node).
    pub fn left_mass(&self) -> f64 {
        let nodes = self.grid.nodes();
        let dens: Vec<f64> = nodes
            .iter()
            .zip(&self.psi)
            .filter(|(&k, _)| k <= 0.0)
            .map(|(_, a)| a.norm_sqr())
            .collect();
        if dens.len() < 2 {
            // at most one node at k ≤ 0: a measure-zero sliver
            return 0.0;
        }
        simpson_uniform(&dens, self.grid.step())
    }

    /// Grid-quadrature mean and standard deviation of k under |ψ(k)|².
    pub fn momentum_moments(&self) -> (f64, f64) {
        let nodes = self.grid.nodes();
        let h = self.grid.step();
        let dens: Vec<f64> = self.psi.iter().map(|a| a.norm_sqr()).collect();
        let norm = simpson_uniform(&dens, h);
        let weighted: Vec<f64> = nodes.iter().zip(&dens).map(|(&k, &d)| k * d).collect();
        let mean = simpson_uniform(&weighted, h) / norm;
        let spread: Vec<f64> = nodes
            .iter()
            .zip(&dens)
            .map(|(&k, &d)| (k - mean) * (k - mean) * d)
            .collect();
        let var = simpson_uniform(&spread, h) / norm;
        (mean, var.max(0.0).sqrt())
    }

    /// The state translated so that a detector at `shift` moves to the
    /// origin: ψ(k) ↦ ψ(k)·e^{ik·shift} (mean position shifts by −`shift`).
    pub fn translated_to_origin(&self, shift: f64) -> Self {
        let psi = self
            .grid
            .nodes()
            .iter()
            .zip(&self.psi)
            .map(|(&k, &a)| a * Complex64::from_polar(1.0, k * shift))
            .collect();
        Self {
            grid: self.grid.clone(),
            psi,
            truncation_mass: self.truncation_mass,
        }
    }
}
