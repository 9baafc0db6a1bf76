//! The Schrödinger probability current and its relation to the arrival
//! densities of [`crate::spectral`].
//!
//! The current through a point,
//!
//! ```text
//! j(x, t) = (ħ/m) · Im[ ψ̄(x, t) ∂ₓψ(x, t) ],
//! ```
//!
//! integrates to the net probability transported past x between two times
//! and defines a second, operator-free route to arrival statistics. For
//! states moving cleanly to the right it is nonnegative and closely tracks
//! π⁺ − π⁻; the pointwise gap d(T) = j − (π⁺ − π⁻) is a genuine physical
//! effect of order 1/(k₀δ) near the peak, and time-averaging over windows
//! beyond the state's fastest beat period suppresses it.
//!
//! The module provides:
//!
//! - [`PositionWave`]: position-representation evaluation (value, spatial
//!   derivative, cumulative probability) for closed-form packets and for
//!   waves synthesized from any [`crate::core::MomentumState`];
//! - [`current_density`] / [`flux_window`]: j and its time integral;
//! - [`mean_arrival_from_current`] and
//!   [`symmetric_ordering_expectation`]: two independent ⟨T⟩ routes
//!   (current-weighted time vs. the symmetrized momentum-space form);
//! - [`discrepancy`], [`discrepancy_double_integral`],
//!   [`smoothed_discrepancy`], and the [`current_comparison`] sweep
//!   builder for studying j against the operator densities.

mod discrepancy;
mod flux;
mod wave;

pub(crate) use flux::arrival_window;

pub use discrepancy::{
    current_comparison, discrepancy, discrepancy_double_integral, smoothed_discrepancy,
    CurrentComparison,
};
pub use flux::{
    current_density, flux_window, mean_arrival_from_current, symmetric_ordering_expectation,
    symmetric_ordering_refinements, LEFT_MASS_LIMIT,
};
pub use wave::{position_moments, PositionWave, SynthesizedWave};
