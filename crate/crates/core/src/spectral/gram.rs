//! Orthogonality of the regulated eigenfunctions, and the failure of the
//! unregulated ones.
//!
//! In the coordinate Z the regulated inner product is a pure Fourier integral,
//!
//! ```text
//! ⟨T,η | T′,η′⟩ = δ_{η,η′} · (ħ/2πm) ∫ e^{iωZ} dZ,     ω = ħ(T′−T)/m,
//! ```
//!
//! over Z ∈ (−∞, Z_max): a δ-function in the infinite-cutoff limit. The
//! discretization splits the half-line at the regulator scale ε:
//!
//! * |k| ≥ ε carries all the probability weight and is integrated by a
//!   composite Simpson rule with a smooth outer taper ([`smooth_taper`]),
//! * |k| < ε maps to Z ∈ (−∞, 0) where the phase e^{iωZ} needs momenta as
//!   small as ε·e^{−1/(ωε²)} — no uniform k-grid can reach them, so this
//!   piece enters through its Abel-regularized closed form −i/ω.
//!
//! The two boundary terms at Z = 0 cancel exactly, leaving only quadrature
//! error in the off-diagonal entries: they decay to zero as a power of the
//! grid step, which is the discrete fingerprint of orthogonality.
//!
//! Without the regulator the same overlap has an extra non-δ part,
//! −i/(π(T−T′)): eigenfunctions of the bare operator are not orthogonal.
//! [`unregulated_overlap_defect`] gives that closed form and
//! [`unregulated_overlap_numeric`] reproduces it by direct quadrature.

use num_complex::Complex64;

use crate::core::{MomentumGrid, PhysicalParams};
use crate::error::{Error, Result};
use crate::numeric::{simpson_uniform, smooth_taper};
use crate::spectral::regulator::{Regulator, Sign};

/// Fraction of the |k| quadrature range covered by the outer taper.
const TAPER_FRACTION: f64 = 0.35;

/// Magnitude range [lo, hi] of the half-line covered by `grid` for `sign`.
fn half_line_reach(grid: &MomentumGrid, sign: Sign) -> (f64, f64) {
    match sign {
        Sign::Plus => (grid.k_min().max(0.0), grid.k_max()),
        Sign::Minus => ((-grid.k_max()).max(0.0), -grid.k_min()),
    }
}

/// Discretized inner product ⟨T_row, sign_row | T_col, sign_col⟩.
///
/// The detector position multiplies both eigenfunctions by the same
/// translation phase and cancels, so entries depend only on the times, the
/// signs, the regulator, and the quadrature grid. `grid` fixes the resolution
/// and outer cutoff of the |k| ≥ ε quadrature; the sub-ε tail is always
/// included via its closed form (off-diagonal only — on the diagonal it is
/// the divergent δ(0) weight and is left out, making the diagonal a finite
/// cutoff-dependent stand-in).
pub fn gram_entry(
    r: &Regulator,
    t_row: f64,
    sign_row: Sign,
    t_col: f64,
    sign_col: Sign,
    grid: &MomentumGrid,
    params: &PhysicalParams,
) -> Result<Complex64> {
    params.validate()?;
    if sign_row != sign_col {
        // Disjoint momentum supports.
        return Ok(Complex64::default());
    }
    let eps = r.epsilon;
    let (_, hi) = half_line_reach(grid, sign_row);
    let omega = params.hbar * (t_col - t_row) / params.mass;
    let scale = params.hbar / (2.0 * std::f64::consts::PI * params.mass);

    if hi <= eps {
        // No resolvable band; only the sub-ε tail remains.
        return Ok(if omega == 0.0 {
            Complex64::default()
        } else {
            scale * Complex64::new(0.0, -1.0 / omega)
        });
    }

    // |k| ≥ ε: uniform Simpson in |k| at the grid's resolution, starting
    // exactly at ε so the Z = 0 boundary term cancels against the tail.
    let cells = ((hi - eps) / grid.step()).ceil().max(2.0) as usize;
    let n = 2 * cells.div_ceil(2) + 1;
    let h = (hi - eps) / (n - 1) as f64;
    let taper_start = hi - TAPER_FRACTION * (hi - eps);
    let taper_len = TAPER_FRACTION * (hi - eps);
    let vals: Vec<Complex64> = (0..n)
        .map(|j| {
            let k = eps + j as f64 * h;
            let z = (k * k - eps * eps) / 2.0;
            let w = k * smooth_taper((k - taper_start) / taper_len);
            Complex64::from_polar(w, omega * z)
        })
        .collect();
    let mut entry = scale * simpson_uniform(&vals, h);

    if omega != 0.0 {
        // Sub-ε tail: Z = ε²·ln(|k|/ε) runs to −∞, so the Abel limit of
        // (ħ/2πm)∫_{−∞}^{0} e^{iωZ} dZ replaces any quadrature: −i·scale/ω.
        entry += scale * Complex64::new(0.0, -1.0 / omega);
    }
    Ok(entry)
}

/// Gram matrix G[i][j] = ⟨T_i, sign | T_j, sign⟩ over distinct times.
///
/// `detector` is accepted for interface symmetry with the density routines;
/// the translation phase cancels inside every entry.
pub fn gram_matrix(
    r: &Regulator,
    times: &[f64],
    sign: Sign,
    detector: f64,
    grid: &MomentumGrid,
    params: &PhysicalParams,
) -> Result<Vec<Vec<Complex64>>> {
    if !detector.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "detector position must be finite, got {detector}"
        )));
    }
    for (i, &ti) in times.iter().enumerate() {
        for &tj in &times[i + 1..] {
            if ti == tj {
                return Err(Error::CoincidentEigenvalues { t: ti });
            }
        }
    }
    let mut matrix = Vec::with_capacity(times.len());
    for &ti in times {
        let mut row = Vec::with_capacity(times.len());
        for &tj in times {
            row.push(gram_entry(r, ti, sign, tj, sign, grid, params)?);
        }
        matrix.push(row);
    }
    Ok(matrix)
}

/// The non-δ part of the **unregulated** overlap: −i/(π(T−T′)).
///
/// This is the closed-form pathology witness: eigenfunctions of the bare
/// arrival-time operator fail to be orthogonal by exactly this amount.
pub fn unregulated_overlap_defect(t: f64, t_prime: f64) -> Result<Complex64> {
    if t == t_prime {
        return Err(Error::CoincidentEigenvalues { t });
    }
    Ok(Complex64::new(0.0, -1.0 / (std::f64::consts::PI * (t - t_prime))))
}

/// Direct quadrature of the unregulated overlap on [−k_max, k_max].
///
/// The unregulated eigenfunctions carry weight √k with the principal root on
/// both half-lines, so conj·pair gives |k|·e^{iħ(T′−T)k²/2m} and the two
/// half-lines fold onto 2∫₀^{k_max}. A smooth outer taper removes the hard
/// cutoff's O(1/ω) ringing; the tapered value converges to
/// [`unregulated_overlap_defect`] as k_max grows.
pub fn unregulated_overlap_numeric(
    t: f64,
    t_prime: f64,
    params: &PhysicalParams,
    k_max: f64,
    n: usize,
) -> Result<Complex64> {
    params.validate()?;
    if t == t_prime {
        return Err(Error::CoincidentEigenvalues { t });
    }
    if !k_max.is_finite() || k_max <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "k_max must be positive and finite, got {k_max}"
        )));
    }
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "unregulated overlap quadrature needs ≥ 3 nodes, got {n}"
        )));
    }
    let a = params.hbar * (t_prime - t) / (2.0 * params.mass);
    let scale = params.hbar / (2.0 * std::f64::consts::PI * params.mass);
    let h = k_max / (n - 1) as f64;
    let taper_start = (1.0 - TAPER_FRACTION) * k_max;
    let taper_len = TAPER_FRACTION * k_max;
    let vals: Vec<Complex64> = (0..n)
        .map(|j| {
            let k = j as f64 * h;
            let w = 2.0 * k * smooth_taper((k - taper_start) / taper_len);
            Complex64::from_polar(w, a * k * k)
        })
        .collect();
    Ok(scale * simpson_uniform(&vals, h))
}
