//! Kahan–Neumaier compensated accumulators.
//!
//! Long oscillatory sums in this crate can cancel by many orders of magnitude
//! (e.g. confluent-hypergeometric series at complex argument, where the
//! largest term exceeds the result by e^{|z|−Re z}). Compensated summation
//! keeps an error term alongside the running sum, which in practice doubles
//! the effective accumulator precision and turns an O(n·u·Σ|tᵢ|) worst case
//! into O(u·Σ|tᵢ|) with u the unit roundoff.

use num_complex::Complex64;

/// Compensated accumulator for real sums (Neumaier variant, which also
/// handles the case where the incoming term dominates the running sum).
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    /// Creates an empty accumulator.
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds one term.
    #[inline]
    pub fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.compensation += (self.sum - t) + term;
        } else {
            self.compensation += (term - t) + self.sum;
        }
        self.sum = t;
    }

    /// Current compensated value of the sum.
    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Compensated accumulator for complex sums (independent real/imaginary
/// compensation).
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanComplex {
    re: KahanSum,
    im: KahanSum,
}

impl KahanComplex {
    /// Creates an empty accumulator.
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds one term.
    #[inline]
    pub fn add(&mut self, term: Complex64) {
        self.re.add(term.re);
        self.im.add(term.im);
    }

    /// Current compensated value of the sum.
    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}
