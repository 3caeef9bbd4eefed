//! Scalar helpers shared by the radius equations and the extremal family.
//!
//! Both helpers are small analytic functions that lose digits if evaluated
//! naively near 0, so each switches to its Taylor series there.

/// `h1(x) = x/(1-x) + ln(1-x) = sum_{n>=2} (1 - 1/n) x^n` for `0 <= x < 1`.
///
/// The two terms cancel to `O(x^2)`, so for small `x` the naive form loses
/// roughly `-2 log10(x)` digits. Below `x = 1e-2` the series is summed
/// directly; above, `ln_1p` keeps the logarithm accurate.
pub(crate) fn h1(x: f64) -> f64 {
    debug_assert!((0.0..1.0).contains(&x));
    if x < 1e-2 {
        x * x * phi(x)
    } else {
        x / (1.0 - x) + (-x).ln_1p()
    }
}

/// `phi(x) = sum_{n>=2} ((n-1)/n) x^(n-2) = h1(x)/x^2` for `0 <= x < 1`,
/// with the removable singularity filled in: `phi(0) = 1/2`.
///
/// In closed form `phi(x) = 1/(1-x) + (x + ln(1-x))/x^2`, which suffers the
/// same cancellation as `h1`; the series is used below `x = 1/2`, where it
/// converges in at most ~60 terms at full precision.
pub(crate) fn phi(x: f64) -> f64 {
    debug_assert!((0.0..1.0).contains(&x));
    if x < 0.5 {
        let mut sum = 0.0;
        let mut pow = 1.0; // x^j
        let mut j = 0u32;
        loop {
            let term = (j + 1) as f64 / (j + 2) as f64 * pow;
            sum += term;
            if term < 1e-18 * sum.max(0.5) {
                return sum;
            }
            pow *= x;
            j += 1;
        }
    } else {
        1.0 / (1.0 - x) + (x + (-x).ln_1p()) / (x * x)
    }
}

/// `x^e` for unsigned integer exponents, the only powers the radius
/// equations need.
pub(crate) fn powu(x: f64, e: u32) -> f64 {
    x.powi(e as i32)
}
