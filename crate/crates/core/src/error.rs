//! Error type shared by every fallible routine in the crate.
//!
//! Variants are split by *cause* so callers can distinguish "the request was
//! malformed" (fix the input) from "the requested resolution cannot support
//! the computation" (refine the grid / widen the window) from "an iterative
//! scheme failed to converge" (loosen the tolerance or report failure).

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A constructor or routine received a parameter outside its domain
    /// (non-positive width, unordered bounds, zero-norm state, …).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The momentum grid does not cover the packet's essential support
    /// (mean ± 6 standard deviations), so discretization would silently
    /// truncate non-negligible probability mass.
    #[error(
        "momentum grid [{k_lo}, {k_hi}] too narrow for packet support [{required_lo}, {required_hi}]"
    )]
    GridTooNarrow {
        /// Lower edge of the offered grid.
        k_lo: f64,
        /// Upper edge of the offered grid.
        k_hi: f64,
        /// Required lower coverage (mean − 6σ, floored at the regulated axis).
        required_lo: f64,
        /// Required upper coverage (mean + 6σ).
        required_hi: f64,
    },

    /// A half-line-specific quantity (e.g. the positive-branch phase
    /// coordinate) was requested at a momentum on the opposite half-line.
    #[error("momentum k = {k} lies on the wrong half-line for sign {sign}")]
    WrongHalfLine {
        /// Offending momentum.
        k: f64,
        /// Requested half-line, `+1` or `-1`.
        sign: i8,
    },

    /// The overlap of two unregulated eigenfunctions was requested at equal
    /// arrival times, where it is a delta function rather than a number.
    #[error("overlap of unregulated eigenfunctions diverges at coincident times T = {t}")]
    CoincidentEigenvalues {
        /// The coincident arrival time.
        t: f64,
    },

    /// The oscillatory projection phase advances by more than the resolvable
    /// limit per grid step, so the quadrature would alias. Refine the
    /// momentum grid or reduce |T|.
    #[error(
        "projection phase under-resolved: {rate:.3} rad per grid step exceeds limit {limit:.3}; \
         refine the momentum grid or reduce |T|"
    )]
    PhaseUnderresolved {
        /// Worst-case phase advance per step, radians.
        rate: f64,
        /// Maximum phase advance per step the quadrature accepts.
        limit: f64,
    },

    /// The time-representation map is defined only for right-moving plane
    /// waves with k > 0.
    #[error("time representation requires positive momentum, got k = {k}")]
    NonpositiveMomentum {
        /// Offending momentum.
        k: f64,
    },

    /// A special-function power series failed to reach the requested
    /// tolerance within the configured number of terms.
    #[error(
        "series for {function} did not converge within {max_terms} terms \
         (last relative term {last_term:.3e}, tolerance {tolerance:.3e})"
    )]
    SeriesDivergence {
        /// Human-readable name of the function being summed.
        function: &'static str,
        /// Term budget that was exhausted.
        max_terms: usize,
        /// Relative magnitude of the last term examined.
        last_term: f64,
        /// Requested relative tolerance.
        tolerance: f64,
    },

    /// Richardson extrapolation of the reference quadrature did not settle
    /// to the requested tolerance across the configured refinement levels.
    #[error(
        "reference quadrature did not converge: residual {residual:.3e} after {levels} levels \
         (tolerance {tolerance:.3e})"
    )]
    NoConvergence {
        /// Refinement levels actually used.
        levels: usize,
        /// Final extrapolation residual.
        residual: f64,
        /// Requested absolute tolerance.
        tolerance: f64,
    },

    /// A routine that assumes a right-moving state (e.g. the mean-arrival
    /// integral over the current) received a state with non-negligible
    /// left-moving probability.
    #[error(
        "state has left-moving probability mass {left_mass:.3e} > {limit:.3e}; \
         routine is defined for right-moving states"
    )]
    UnsupportedState {
        /// Probability carried by k ≤ 0 components.
        left_mass: f64,
        /// Largest left-moving mass the routine accepts.
        limit: f64,
    },
}
