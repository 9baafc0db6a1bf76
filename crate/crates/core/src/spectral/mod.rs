//! The regulated arrival-time operator: regulator functions, eigenfunctions,
//! projections of states onto them, arrival-time probability densities, and
//! the orthogonality pathology of the unregulated operator.
//!
//! # Construction
//!
//! Quantizing the classical arrival time T = m(X − x)/p with symmetric
//! ordering produces an operator containing 1/p̂, which is singular at p = 0
//! and leaves the eigenfunctions of the naive operator non-orthogonal (see
//! [`unregulated_overlap_defect`]). The cure implemented here replaces 1/k by
//! a bounded, continuous, odd function f_ε(k) that equals 1/k exactly for
//! |k| > ε ([`Regulator`]). On each momentum half-line the coordinate
//!
//! ```text
//! Z_±(k) = ∫_{±ε}^{k} dk′ / f_ε(k′)
//! ```
//!
//! turns the regulated eigenfunctions into plane waves e^{i(ħT/m)Z}, making
//! orthogonality and completeness manifest. Projecting a state ψ(k) onto the
//! eigenfunction pair for arrival time T at detector X gives two amplitudes
//! (right- and left-moving); their squared moduli are the arrival density
//! π±(T; X) ([`arrival_density`]), a genuine probability density over T.
//!
//! # Numerical scheme
//!
//! For |k| ≥ ε the projection integrand oscillates with the chirp phase
//! (ħT/m)k²/2. The substitution u = k²/2 makes the phase linear in u, so a
//! Filon-type rule ([`crate::numeric::FilonPlan`]) integrates it with accuracy
//! set by the smoothness of the non-oscillatory weight alone. The |k| < ε
//! remainder is evaluated in the logarithmic coordinate v = ln(ε/|k|), where
//! the regulated phase is again exactly linear. Weights are hoisted into a
//! reusable [`ProjectionPlan`] because they do not depend on T: full
//! time sweeps then cost one oscillatory sum per (T, sign).

mod density;
mod eigenstate;
mod gram;
mod projection;
mod regulator;

pub use density::{
    arrival_density, density_sweep, total_arrival_probability, ArrivalDensity, DensityPoint,
    DensityRow,
};
pub use eigenstate::{eigenstate_value, position_time_kernel, time_rep_factor, ToaEigenstate};
pub use gram::{
    gram_entry, gram_matrix, unregulated_overlap_defect, unregulated_overlap_numeric,
};
pub use projection::{project, ProjectionPlan};
pub use regulator::{regulator_value, z_coordinate, Regulator, RegulatorKind, Sign};
