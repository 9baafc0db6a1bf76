//! Uniform momentum grids on which states are sampled.

use crate::core::packet::GaussianPacket;
use crate::core::params::PhysicalParams;
use crate::error::{Error, Result};

/// A uniform grid of momentum samples k₀ < k₁ < … < k_{n−1}.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumGrid {
    k_min: f64,
    k_max: f64,
    n: usize,
}

impl MomentumGrid {
    /// Creates a uniform grid over `[k_min, k_max]` with `n` nodes.
    pub fn new(k_min: f64, k_max: f64, n: usize) -> Result<Self> {
        if !(k_min.is_finite() && k_max.is_finite()) || k_min >= k_max {
            return Err(Error::InvalidParameter(format!(
                "momentum grid needs finite k_min < k_max, got [{k_min}, {k_max}]"
            )));
        }
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "momentum grid needs at least 2 nodes, got {n}"
            )));
        }
        Ok(Self { k_min, k_max, n })
    }

    /// Default grid for a packet: mean momentum ± 8 momentum-spread widths
    /// (8/δ), clipped at the regulator scale so a right-mover's grid stays on
    /// the positive half-line (mirrored for left-movers), with 4096 nodes.
    pub fn for_packet(packet: &GaussianPacket, params: &PhysicalParams) -> Result<Self> {
        Self::for_packet_sized(packet, params, 4096)
    }

    /// Same as [`MomentumGrid::for_packet`] with an explicit node count.
    pub fn for_packet_sized(
        packet: &GaussianPacket,
        params: &PhysicalParams,
        n: usize,
    ) -> Result<Self> {
        let half_width = 8.0 / packet.delta;
        let (mut lo, mut hi) = (packet.k0 - half_width, packet.k0 + half_width);
        if packet.k0 > 0.0 {
            lo = lo.max(params.epsilon);
        } else if packet.k0 < 0.0 {
            hi = hi.min(-params.epsilon);
        }
        Self::new(lo, hi, n)
    }

    /// Lower grid edge.
    pub fn k_min(&self) -> f64 {
        self.k_min
    }

    /// Upper grid edge.
    pub fn k_max(&self) -> f64 {
        self.k_max
    }

    /// Node count.
    pub fn len(&self) -> usize {
        self.n
    }

    /// Grids always hold ≥ 2 nodes.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Node spacing.
    pub fn step(&self) -> f64 {
        (self.k_max - self.k_min) / (self.n - 1) as f64
    }

    /// The i-th node (0-based).
    pub fn node(&self, i: usize) -> f64 {
        debug_assert!(i < self.n);
        if i == self.n - 1 {
            // Land exactly on the upper edge regardless of rounding.
            self.k_max
        } else {
            self.k_min + i as f64 * self.step()
        }
    }

    /// All nodes in ascending order.
    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    /// Whether `k` lies within the grid span.
    pub fn contains(&self, k: f64) -> bool {
        (self.k_min..=self.k_max).contains(&k)
    }

    /// Largest |k| on the grid (sets the fastest oscillation of evolution
    /// phases).
    pub fn max_abs_k(&self) -> f64 {
        self.k_min.abs().max(self.k_max.abs())
    }
}
