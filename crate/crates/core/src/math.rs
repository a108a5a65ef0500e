//! Scalar helpers shared by the solvers.

pub use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2, TAU};
pub use num_complex::Complex64 as C64;
pub use num_traits::Float;

/// `ln C(n, k)` through log-gamma, finite for any `k <= n`.
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    debug_assert!(k <= n);
    let (n, k) = (n as f64, k as f64);
    libm::lgamma(n + 1.0) - libm::lgamma(k + 1.0) - libm::lgamma(n - k + 1.0)
}

/// `C(n, k)^{1/2}`.
pub fn sqrt_binomial(n: usize, k: usize) -> f64 {
    if k == 0 || k == n {
        return 1.0;
    }
    (0.5 * ln_binomial(n, k)).exp()
}

/// Wraps an angle into `[0, 2π)`.
pub fn wrap_tau(x: f64) -> f64 {
    let r = x % TAU;
    if r < 0.0 {
        r + TAU
    } else {
        r
    }
}

/// Wraps an angle into `(-π, π]`.
pub fn wrap_pi(x: f64) -> f64 {
    let r = wrap_tau(x);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// `x^k` for a non-negative integer exponent; `0^0 = 1`.
#[inline]
pub fn powu(x: f64, k: usize) -> f64 {
    x.powi(k as i32)
}
