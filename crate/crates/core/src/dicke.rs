//! GM of symmetric states with non-negative Dicke amplitudes.
//!
//! For such states the closest product state can be taken symmetric with a
//! real single-party ket `cos α |0⟩ + sin α |1⟩`, so
//! `G = max_α h(α)` with `h(α) = Σ_m √C(N,m) a_m cos^{N−m}α sin^m α`.

use alloc::vec;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{GmError, Result};
use crate::math::{powu, sqrt_binomial, Float, FRAC_PI_2};
use crate::optimize::bisect;
use crate::states::{BlochVector, GmResult, Method, SymmetricDickeState};

/// Derivative samples per qubit on `[0, π/2]`.
pub const GRID_PER_QUBIT: usize = 512;
/// Bisection width for critical points of `h`.
pub const ALPHA_TOL: f64 = 1e-12;
/// Objective values closer than this are treated as ties (smaller α wins).
pub const TIE_TOL: f64 = 1e-12;

/// `h(α)` at one angle.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct DickeObjectiveSample {
    pub alpha: f64,
    pub value: f64,
}

/// Pre-multiplied coefficients `√C(N,m) a_m`.
struct Objective {
    n: usize,
    coef: Vec<f64>,
}

impl Objective {
    fn new(state: &SymmetricDickeState) -> Result<Self> {
        let amps = state.real_amplitudes().ok_or_else(|| {
            GmError::Unsupported(
                "Dicke amplitudes are not all real and non-negative; use the oracle".into(),
            )
        })?;
        let n = state.n_qubits();
        let coef = amps
            .iter()
            .enumerate()
            .map(|(m, a)| sqrt_binomial(n, m) * a)
            .collect();
        Ok(Objective { n, coef })
    }

    fn value(&self, alpha: f64) -> f64 {
        let (s, c) = alpha.sin_cos();
        self.coef
            .iter()
            .enumerate()
            .map(|(m, k)| k * powu(c, self.n - m) * powu(s, m))
            .sum()
    }

    fn derivative(&self, alpha: f64) -> f64 {
        let (s, c) = alpha.sin_cos();
        let n = self.n;
        let mut acc = 0.0;
        for (m, k) in self.coef.iter().enumerate() {
            if *k == 0.0 {
                continue;
            }
            if m > 0 {
                acc += k * m as f64 * powu(c, n - m + 1) * powu(s, m - 1);
            }
            if m < n {
                acc -= k * (n - m) as f64 * powu(c, n - m - 1) * powu(s, m + 1);
            }
        }
        acc
    }
}

/// Evaluates `h(α)` for a non-negative state.
pub fn dicke_objective(state: &SymmetricDickeState, alpha: f64) -> Result<f64> {
    if !(-1e-12..=FRAC_PI_2 + 1e-12).contains(&alpha) {
        return Err(GmError::param("alpha must lie in [0, pi/2]"));
    }
    Ok(Objective::new(state)?.value(alpha))
}

/// Global maximizer of `h` on `[0, π/2]`.
///
/// Brackets every sign change of `h'` on a uniform grid, bisects each, and
/// compares `h` at all critical points and both endpoints.
pub fn dicke_optimum(state: &SymmetricDickeState) -> Result<DickeObjectiveSample> {
    let obj = Objective::new(state)?;
    let steps = GRID_PER_QUBIT * obj.n;
    let alpha_at = |i: usize| FRAC_PI_2 * i as f64 / steps as f64;

    let mut critical = vec![0.0, FRAC_PI_2];
    let mut prev = obj.derivative(0.0);
    for i in 1..=steps {
        let a = alpha_at(i);
        let d = obj.derivative(a);
        if d == 0.0 {
            critical.push(a);
        } else if prev != 0.0 && (d > 0.0) != (prev > 0.0) {
            if let Some(root) = bisect(|x| Some(obj.derivative(x)), alpha_at(i - 1), a, ALPHA_TOL) {
                critical.push(root);
            }
        }
        prev = d;
    }
    critical.sort_by(|a, b| a.total_cmp(b));

    let mut best = DickeObjectiveSample {
        alpha: 0.0,
        value: f64::NEG_INFINITY,
    };
    for alpha in critical {
        let value = obj.value(alpha);
        if value > best.value + TIE_TOL {
            best = DickeObjectiveSample { alpha, value };
        }
    }
    Ok(best)
}

/// GM of a symmetric state with non-negative Dicke amplitudes.
pub fn gm_dicke_nonneg(state: &SymmetricDickeState) -> Result<GmResult> {
    let best = dicke_optimum(state)?;
    let g = best.value.clamp(0.0, 1.0);
    let party = BlochVector::from_angles(2.0 * best.alpha, 0.0);
    Ok(GmResult::from_g_squared(g * g, Method::Dicke)
        .with_closest_product(vec![party; state.n_qubits()]))
}

/// `G` of the single Dicke state `|m, N⟩`: `√(C(N,m) (m/N)^m ((N−m)/N)^{N−m})`.
pub fn single_dicke_g(n: usize, m: usize) -> f64 {
    let p = m as f64 / n as f64;
    sqrt_binomial(n, m) * (powu(p, m) * powu(1.0 - p, n - m)).sqrt()
}
