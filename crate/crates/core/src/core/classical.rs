//! Classical free-particle arrival time: the reference the quantum results
//! are compared against.

use crate::core::params::PhysicalParams;

/// A classical phase-space point (position, momentum) at t = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalState {
    /// Initial position.
    pub x0: f64,
    /// Initial momentum.
    pub p0: f64,
}

/// Arrival time of a classical trajectory at a detector, or the distinguished
/// outcome that the trajectory never reaches it.
///
/// "Never" is an ordinary value of the observable, not an error: a particle
/// at rest away from the detector simply has no arrival time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassicalArrival {
    /// The trajectory crosses the detector at this time (negative values mean
    /// it crossed in the past).
    At(f64),
    /// The trajectory never reaches the detector.
    Never,
}

impl ClassicalArrival {
    /// True when the particle is detected at some (possibly past) time.
    pub fn is_detected(&self) -> bool {
        matches!(self, ClassicalArrival::At(_))
    }

    /// The arrival time, if detected.
    pub fn time(&self) -> Option<f64> {
        match self {
            ClassicalArrival::At(t) => Some(*t),
            ClassicalArrival::Never => None,
        }
    }
}

/// Inverts the free trajectory x(t) = x₀ + p₀t/m at the detector position:
/// T = m(X − x₀)/p₀.
///
/// A particle at rest (p₀ = 0) arrives at time 0 if it already sits on the
/// detector, and never otherwise.
pub fn classical_arrival_time(
    s: ClassicalState,
    detector: f64,
    params: &PhysicalParams,
) -> ClassicalArrival {
    if s.p0 == 0.0 {
        if s.x0 == detector {
            ClassicalArrival::At(0.0)
        } else {
            ClassicalArrival::Never
        }
    } else {
        ClassicalArrival::At(params.mass * (detector - s.x0) / s.p0)
    }
}
