//! Shared numerical kernels: compensated summation, composite quadrature on
//! uniform grids, high-order local interpolation, and a Filon-type quadrature
//! for integrals with a linear oscillatory phase.
//!
//! Everything here is deterministic and allocation-light; the physics modules
//! build their fast paths on these kernels while the [`crate::oracle`] module
//! deliberately avoids them (plain trapezoid sums only) so that cross-checks
//! exercise independent code paths.

mod filon;
mod interp;
mod kahan;
mod quad;
mod window;

pub use filon::FilonPlan;
pub use interp::resample_uniform;
pub use kahan::{KahanComplex, KahanSum};
pub use quad::{simpson_uniform, trapezoid_uniform};
pub use window::smooth_taper;
