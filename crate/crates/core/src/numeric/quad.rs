//! Composite Newton–Cotes quadrature on uniformly spaced samples.
//!
//! Both rules accept any sample count n ≥ 2. Simpson's rule needs an even
//! interval count; when n − 1 is odd the last three intervals are closed with
//! the 3/8 rule, preserving fourth-order accuracy.

use std::ops::{Add, Mul};

/// Scalar kinds the quadrature rules accept (f64 and Complex64 in practice).
pub trait QuadScalar: Copy + Default + Add<Output = Self> + Mul<f64, Output = Self> {}
impl<T> QuadScalar for T where T: Copy + Default + Add<Output = T> + Mul<f64, Output = T> {}

/// Composite trapezoid rule over samples spaced by `h`.
///
/// For integrands that decay smoothly to zero at both ends of the grid, the
/// Euler–Maclaurin boundary terms vanish and this simple rule is spectrally
/// accurate — a fact the oracle module exploits deliberately.
pub fn trapezoid_uniform<T: QuadScalar>(values: &[T], h: f64) -> T {
    assert!(values.len() >= 2, "trapezoid rule needs at least two samples");
    let n = values.len();
    let mut acc = T::default();
    for &v in &values[1..n - 1] {
        acc = acc + v;
    }
    (acc + (values[0] + values[n - 1]) * 0.5) * h
}

/// Composite Simpson rule over samples spaced by `h`.
///
/// Fourth-order accurate for smooth integrands. Sample counts with an odd
/// number of intervals are handled by closing the final three intervals with
/// Simpson's 3/8 rule (same order).
pub fn simpson_uniform<T: QuadScalar>(values: &[T], h: f64) -> T {
    let n = values.len();
    assert!(n >= 2, "Simpson rule needs at least two samples");
    match n {
        2 => return (values[0] + values[1]) * (0.5 * h),
        3 => return (values[0] + values[1] * 4.0 + values[2]) * (h / 3.0),
        _ => {}
    }
    let intervals = n - 1;
    if intervals % 2 == 0 {
        simpson_even_intervals(values, h)
    } else {
        // n − 4 leading samples span an even interval count; the remaining
        // three intervals are closed with the 3/8 rule.
        let head = simpson_even_intervals(&values[..n - 3], h);
        let tail = (values[n - 4] + values[n - 3] * 3.0 + values[n - 2] * 3.0 + values[n - 1])
            * (3.0 * h / 8.0);
        head + tail
    }
}

fn simpson_even_intervals<T: QuadScalar>(values: &[T], h: f64) -> T {
    let n = values.len();
    debug_assert!(n >= 3 && (n - 1) % 2 == 0);
    let mut odd = T::default();
    let mut even = T::default();
    let mut idx = 1;
    while idx < n - 1 {
        odd = odd + values[idx];
        idx += 2;
    }
    idx = 2;
    while idx < n - 1 {
        even = even + values[idx];
        idx += 2;
    }
    (values[0] + values[n - 1] + odd * 4.0 + even * 2.0) * (h / 3.0)
}
