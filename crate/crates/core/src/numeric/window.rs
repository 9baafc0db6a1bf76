//! Smooth cutoff window for truncated oscillatory integrals.

/// C⁵ descent from 1 to 0 as `s` runs over [0, 1] (11th-degree smoothstep).
///
/// The first five derivatives vanish at both ends, so multiplying a
/// truncated oscillatory integrand by `smooth_taper((x − x_start)/L)` turns
/// the O(1/ω) hard-cutoff boundary term into an O((ωL)⁻⁶) one: six
/// integrations by parts hit no boundary contribution.
pub fn smooth_taper(s: f64) -> f64 {
    // S₅(x) = x⁶(462 − 1980x + 3465x² − 3080x³ + 1386x⁴ − 252x⁵), the C⁵
    // smoothstep; it satisfies S₅(1−x) = 1 − S₅(x). Evaluating whichever of
    // S₅(s), S₅(1−s) is small keeps the tails relatively accurate (the
    // alternating polynomial cancels catastrophically where its value ≈ 1).
    fn s5(x: f64) -> f64 {
        let x2 = x * x;
        let x6 = x2 * x2 * x2;
        x6 * (462.0 - x * (1980.0 - x * (3465.0 - x * (3080.0 - x * (1386.0 - 252.0 * x)))))
    }
    if s <= 0.0 {
        1.0
    } else if s >= 1.0 {
        0.0
    } else if s <= 0.5 {
        1.0 - s5(s)
    } else {
        s5(1.0 - s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoint_values_are_exact() {
        assert_eq!(smooth_taper(-1.0), 1.0);
        assert_eq!(smooth_taper(0.0), 1.0);
        assert_eq!(smooth_taper(1.0), 0.0);
        assert_eq!(smooth_taper(2.0), 0.0);
        assert!((smooth_taper(0.5) - 0.5).abs() < 1e-15); // odd symmetry about ½
    }

    #[test]
    fn is_monotone_and_flat_at_both_ends() {
        let mut prev = 1.0;
        for j in 1..=1000 {
            let v = smooth_taper(j as f64 / 1000.0);
            assert!(v <= prev + 1e-15);
            prev = v;
        }
        // C⁵ contact: near the ends the window deviates only at O(s⁶).
        assert!((smooth_taper(1e-3) - 1.0).abs() < 1e-14);
        assert!(smooth_taper(1.0 - 1e-3).abs() < 1e-14);
    }
}
