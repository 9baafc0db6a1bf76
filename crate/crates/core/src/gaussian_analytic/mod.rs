//! Closed-form reference results for Gaussian packets.
//!
//! Everything here is evaluated from exact formulas — confluent
//! hypergeometric closed forms for the arrival amplitudes, and elementary
//! closed forms for the semiclassical approximations — with no momentum
//! grid involved. That makes this module an independent cross-check for the
//! grid-based spectral projection: the two routes share no code beyond
//! complex arithmetic.
//!
//! - [`analytic_amplitude`]: exact arrival amplitude of a Gaussian packet
//!   for either movement direction, valid at any detector and time.
//! - [`approx_amplitude`] / [`approx_density`]: the first-order
//!   semiclassical forms for fast packets (k₀δ ≫ 1), whose density is
//!   exactly the Schrödinger probability current of the same packet.
//! - [`special`]: the underlying special functions (complex Γ, Kummer Φ,
//!   generalized Laguerre, Tricomi U asymptotics), exposed for reuse and
//!   direct testing.

pub mod special;

mod amplitude;

pub use amplitude::{analytic_amplitude, approx_amplitude, approx_density};
pub use special::{
    gamma, kummer_phi, kummer_phi_with, laguerre_general, laguerre_general_with,
    tricomi_u_asymptotic, SpecialFunctionConfig,
};
