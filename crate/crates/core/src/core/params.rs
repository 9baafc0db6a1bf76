//! Global physical constants and the regulator scale.

use crate::error::{Error, Result};

/// Physical constants of the problem plus the momentum scale below which the
/// arrival-time operator is regulated.
///
/// Defaults use natural units ħ = m = 1 with ε = 10⁻³, suited to packets with
/// momenta of order 10–40 in the same units; all three are configurable so
/// any consistent unit system works.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Reduced Planck constant (action units), > 0.
    pub hbar: f64,
    /// Particle mass, > 0.
    pub mass: f64,
    /// Default regulator scale (inverse-length units), > 0. Momenta with
    /// |k| ≤ ε are treated by the bounded regulator branch.
    pub epsilon: f64,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
            epsilon: 1e-3,
        }
    }
}

impl PhysicalParams {
    /// Validated constructor.
    pub fn new(hbar: f64, mass: f64, epsilon: f64) -> Result<Self> {
        let p = Self {
            hbar,
            mass,
            epsilon,
        };
        p.validate()?;
        Ok(p)
    }

    /// Checks the positivity invariants.
    pub fn validate(&self) -> Result<()> {
        if !(self.hbar.is_finite() && self.hbar > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "hbar must be positive and finite, got {}",
                self.hbar
            )));
        }
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "mass must be positive and finite, got {}",
                self.mass
            )));
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "epsilon must be positive and finite, got {}",
                self.epsilon
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_natural_units() {
        let p = PhysicalParams::default();
        assert_eq!((p.hbar, p.mass, p.epsilon), (1.0, 1.0, 1e-3));
        assert!(p.validate().is_ok());
    }

    #[test]
    fn rejects_nonpositive_constants() {
        assert!(PhysicalParams::new(0.0, 1.0, 1e-3).is_err());
        assert!(PhysicalParams::new(1.0, -2.0, 1e-3).is_err());
        assert!(PhysicalParams::new(1.0, 1.0, 0.0).is_err());
        assert!(PhysicalParams::new(1.0, 1.0, f64::NAN).is_err());
    }
}
