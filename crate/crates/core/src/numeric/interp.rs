//! Local polynomial interpolation on uniform grids.
//!
//! An 8-point (degree-7) sliding Lagrange stencil: for band-limited-ish
//! smooth data the interpolation error is O(h⁸ f⁽⁸⁾/8!), far below the
//! quadrature errors of the schemes that consume the resampled values. Near
//! the grid edges the stencil is clamped, falling back to one-sided
//! interpolation of the same order.

use num_complex::Complex64;

const STENCIL: usize = 8;

/// Resamples uniformly gridded complex data at arbitrary target abscissae.
///
/// `src_lo` and `src_step` describe the source grid (node i at
/// `src_lo + i·src_step`); `values` are the source samples; `targets` are the
/// evaluation points, which must lie inside the source span (targets are
/// clamped to the span to absorb last-ulp rounding).
///
/// # Panics
/// Panics if the source grid has fewer than 8 nodes or a non-positive step.
pub fn resample_uniform(
    src_lo: f64,
    src_step: f64,
    values: &[Complex64],
    targets: &[f64],
) -> Vec<Complex64> {
    assert!(values.len() >= STENCIL, "need at least 8 source nodes");
    assert!(src_step > 0.0, "source step must be positive");
    let n = values.len();
    let mut out = Vec::with_capacity(targets.len());
    for &x in targets {
        // Fractional index, clamped to the grid span.
        let t = ((x - src_lo) / src_step).clamp(0.0, (n - 1) as f64);
        let nearest = t.round();
        if (t - nearest).abs() < 1e-9 {
            out.push(values[nearest as usize]);
            continue;
        }
        let i0 = (t.floor() as usize)
            .saturating_sub(STENCIL / 2 - 1)
            .min(n - STENCIL);
        let s = t - i0 as f64; // position within the stencil, in steps
        out.push(lagrange8(&values[i0..i0 + STENCIL], s));
    }
    out
}

/// Degree-7 Lagrange evaluation at fractional position `s` ∈ (−∞, ∞) within
/// an 8-node unit-spaced stencil (nodes at 0..7).
#[inline]
fn lagrange8(w: &[Complex64], s: f64) -> Complex64 {
    debug_assert_eq!(w.len(), STENCIL);
    // ℓ_j(s) = Π_{m≠j} (s − m)/(j − m); denominators are the fixed integers
    // Π_{m≠j}(j − m) = (−1)^{7−j} j! (7−j)!.
    const DENOM: [f64; STENCIL] = [
        -5040.0, // j=0: (−1)^7·0!·7!
        720.0,   // j=1: (−1)^6·1!·6!
        -240.0,  // j=2
        144.0,   // j=3
        -144.0,  // j=4
        240.0,   // j=5
        -720.0,  // j=6
        5040.0,  // j=7
    ];
    let mut diff = [0.0f64; STENCIL];
    for (j, d) in diff.iter_mut().enumerate() {
        *d = s - j as f64;
    }
    // prefix[j] = Π_{m<j} diff[m]; suffix[j] = Π_{m>j} diff[m].
    let mut prefix = [1.0f64; STENCIL];
    for j in 1..STENCIL {
        prefix[j] = prefix[j - 1] * diff[j - 1];
    }
    let mut suffix = [1.0f64; STENCIL];
    for j in (0..STENCIL - 1).rev() {
        suffix[j] = suffix[j + 1] * diff[j + 1];
    }
    let mut acc = Complex64::default();
    for j in 0..STENCIL {
        acc += w[j] * (prefix[j] * suffix[j] / DENOM[j]);
    }
    acc
}
