//! The bounded odd regulator f_ε replacing 1/k, and the half-line coordinates
//! Z±(k) in which the regulated eigenfunctions are plane waves.

use crate::error::{Error, Result};

/// Functional form of the regulator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RegulatorKind {
    /// f_ε(k) = 1/k for |k| > ε, k/ε² for |k| ≤ ε: continuous, odd, bounded
    /// by 1/ε, and equal to the unregulated 1/k outside the small interval.
    #[default]
    PiecewiseLinear,
}

/// A regulator choice: the momentum scale ε below which 1/k is replaced by a
/// bounded continuation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Regulator {
    /// Regulating scale, > 0.
    pub epsilon: f64,
    /// Functional form inside |k| ≤ ε.
    pub kind: RegulatorKind,
}

impl Default for Regulator {
    fn default() -> Self {
        Self {
            epsilon: 1e-3,
            kind: RegulatorKind::PiecewiseLinear,
        }
    }
}

impl Regulator {
    /// Validated constructor.
    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "regulator scale must be positive and finite, got {epsilon}"
            )));
        }
        Ok(Self {
            epsilon,
            kind: RegulatorKind::PiecewiseLinear,
        })
    }

    /// Regulator using the scale stored in the physical parameters.
    pub fn from_params(params: &crate::core::PhysicalParams) -> Result<Self> {
        Self::new(params.epsilon)
    }
}

/// Which momentum half-line (and hence which member of the eigenfunction
/// pair) a quantity refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// Right-movers: support on k > 0.
    Plus,
    /// Left-movers: support on k < 0.
    Minus,
}

impl Sign {
    /// +1.0 or −1.0.
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    /// +1 or −1.
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Both members of the pair, in (+, −) order.
    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// f_ε(k): 1/k for |k| > ε, k/ε² for |k| ≤ ε.
///
/// Odd, continuous, bounded by 1/ε, nonzero away from k = 0.
pub fn regulator_value(r: &Regulator, k: f64) -> f64 {
    match r.kind {
        RegulatorKind::PiecewiseLinear => {
            if k.abs() > r.epsilon {
                1.0 / k
            } else {
                k / (r.epsilon * r.epsilon)
            }
        }
    }
}

/// Half-line coordinate Z_sign(k) = ∫_{sign·ε}^{k} dk′/f_ε(k′).
///
/// Closed forms for the piecewise-linear kind:
/// (k² − ε²)/2 for |k| ≥ ε and ε²·ln(|k|/ε) for 0 < |k| < ε. Both branches
/// vanish at |k| = ε and are strictly monotonic along each half-line (running
/// to −∞ as k → 0, because dZ/dk = 1/f_ε).
pub fn z_coordinate(r: &Regulator, sign: Sign, k: f64) -> Result<f64> {
    if sign.as_f64() * k <= 0.0 {
        return Err(Error::WrongHalfLine {
            k,
            sign: sign.as_i8(),
        });
    }
    match r.kind {
        RegulatorKind::PiecewiseLinear => {
            let eps = r.epsilon;
            Ok(if k.abs() >= eps {
                (k * k - eps * eps) / 2.0
            } else {
                eps * eps * (k.abs() / eps).ln()
            })
        }
    }
}
