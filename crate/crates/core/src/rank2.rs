//! `g(ρ)` for two-qubit states of rank two in canonical form.
//!
//! The state is `ρ = ½(Σ₀ + x₁Σ₁ + x₂Σ₂ + x₃Σ₃)`, where `Σ₀` projects onto
//! the support subspace fixed by `(γ₁, γ₂)` and `Σ₁..Σ₃` act as Pauli
//! operators inside it. With `ρ₁` fixed by its Bloch vector `(a, b, c)`,
//! the best `ρ₂` aligns with a vector `w`, which gives
//! `max_{ρ₂} tr[ρ(ρ₁⊗ρ₂)] = ¼ f(a, b, c)`.

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{GmError, Result};
use crate::linalg::Matrix4;
use crate::math::{Float, C64};
use crate::optimize::{golden_section_max, maximize_on_sphere};
use crate::oracle::{g_mixed_oracle, OracleConfig};
use crate::states::{BlochVector, PureState, RankTwoCanonical};

/// Inputs with `|x₂|` below this take the one-dimensional route.
pub const X2_SNAP: f64 = 1e-14;
/// Radicand values in `[-RADICAND_CLIP, 0)` are treated as zero.
pub const RADICAND_CLIP: f64 = 1e-12;

struct Trig {
    s1: f64,
    c1: f64,
    s2: f64,
    c2: f64,
}

impl Trig {
    fn new(gamma1: f64, gamma2: f64) -> Self {
        let (s1, c1) = gamma1.sin_cos();
        let (s2, c2) = gamma2.sin_cos();
        Trig { s1, c1, s2, c2 }
    }
}

/// The four operators `Σ₀..Σ₃` of the canonical form.
pub fn sigma_operators(gamma1: f64, gamma2: f64) -> [Matrix4; 4] {
    let Trig { s1, c1, s2, c2 } = Trig::new(gamma1, gamma2);
    let (u, v, z1, z2) = (c1 * c2, s1 * s2, s1 * c2, c1 * s2);
    let p = Matrix4::pauli_pair;
    let comb = |terms: &[(f64, usize, usize)]| {
        terms
            .iter()
            .fold(Matrix4::zeros(), |acc, &(k, i, j)| acc + p(i, j).scale(0.5 * k))
    };
    [
        comb(&[(1.0, 0, 0), (u, 3, 0), (v, 0, 3), (z1, 1, 1), (z2, 2, 2)]),
        comb(&[(s1, 1, 0), (c2, 0, 1), (s2, 1, 3), (c1, 3, 1)]),
        comb(&[(s2, 2, 0), (c1, 0, 2), (s1, 2, 3), (c2, 3, 2)]),
        comb(&[(v, 3, 0), (u, 0, 3), (-z2, 1, 1), (-z1, 2, 2), (1.0, 3, 3)]),
    ]
}

/// Density matrix of a canonical rank-two state.
pub fn rank2_to_matrix(state: &RankTwoCanonical) -> Matrix4 {
    let [s0, s1, s2, s3] = sigma_operators(state.gamma1, state.gamma2);
    let x = state.x;
    (s0 + s1.scale(x[0]) + s2.scale(x[1]) + s3.scale(x[2])).scale(0.5)
}

/// `f(a,b,c) = scalar_part + |w|`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct TraceDecomposition {
    pub scalar_part: f64,
    pub w: [f64; 3],
}

impl TraceDecomposition {
    pub fn f(&self) -> f64 {
        let w = self.w;
        self.scalar_part + (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt()
    }
}

fn decompose(t: &Trig, x: &[f64; 3], s: &[f64; 3]) -> TraceDecomposition {
    let Trig { s1, c1, s2, c2 } = *t;
    let [x1, x2, x3] = *x;
    let [a, b, c] = *s;
    TraceDecomposition {
        scalar_part: 1.0 + a * x1 * s1 + b * x2 * s2 + c * c1 * c2 + c * x3 * s1 * s2,
        w: [
            a * (c2 * s1 - x3 * c1 * s2) + c * x1 * c1 + x1 * c2,
            b * (c1 * s2 - x3 * c2 * s1) + x2 * c1 + c * x2 * c2,
            b * x2 * s1 + a * x1 * s2 + c * x3 + x3 * c1 * c2 + s1 * s2,
        ],
    }
}

/// Splits `4·max_{ρ₂} tr[ρ(ρ₁⊗ρ₂)]` for `ρ₁ = ½(I + s₁·σ)`.
pub fn trace_decomposition(state: &RankTwoCanonical, s1: &BlochVector) -> TraceDecomposition {
    decompose(&Trig::new(state.gamma1, state.gamma2), &state.x, &s1.s)
}

pub fn f_objective(state: &RankTwoCanonical, s1: &BlochVector) -> f64 {
    trace_decomposition(state, s1).f()
}

/// Samples of `c` in the one-dimensional route.
const LINE_SAMPLES: usize = 4097;

/// `g(ρ)` by direct maximization of `f` over the Bloch vector of `ρ₁`.
///
/// When `x₂ = 0` and `x₁ ≥ 0` the maximum lies on the half circle
/// `a ≥ 0, b = 0`, and only `c ∈ [−1, 1]` is searched.
pub fn g_numeric(state: &RankTwoCanonical) -> f64 {
    let trig = Trig::new(state.gamma1, state.gamma2);
    let mut x = state.x;
    if x[1].abs() < X2_SNAP {
        x[1] = 0.0;
    }
    if x[1] == 0.0 && x[0] >= 0.0 {
        let f = |c: f64| {
            let c = c.clamp(-1.0, 1.0);
            decompose(&trig, &x, &[(1.0 - c * c).max(0.0).sqrt(), 0.0, c]).f()
        };
        0.25 * maximize_on_interval(f, -1.0, 1.0)
    } else {
        let (_, best) = maximize_on_sphere(|s| decompose(&trig, &x, s).f(), 256, 512, 8, 1e-10);
        0.25 * best
    }
}

/// Grid scan plus golden-section refinement of every grid-local maximum.
fn maximize_on_interval<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64) -> f64 {
    let n = LINE_SAMPLES;
    let xs: Vec<f64> = (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect();
    let vals: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut best = f64::NEG_INFINITY;
    for i in 0..n {
        let left = i == 0 || vals[i - 1] <= vals[i];
        let right = i == n - 1 || vals[i + 1] <= vals[i];
        if !(left && right) {
            continue;
        }
        let (a, b) = (xs[i.saturating_sub(1)], xs[(i + 1).min(n - 1)]);
        let (_, v) = golden_section_max(&mut f, a, b, 1e-12);
        best = best.max(v).max(vals[i]);
    }
    best
}

/// Quantities behind the closed form for `x₁ = x₂ = 0`. With `a = √(1−c²)`
/// and `b = 0`, `f = f₂(c) = 1 + u₀c + √(u₁c² + 2u₂c + u₃)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ClosedFormCoefficients {
    pub u0: f64,
    pub u1: f64,
    pub u2: f64,
    pub u3: f64,
    /// Interior stationary point of `f₂`, clamped to `[−1, 1]`; present only
    /// when `u₁ < 0`.
    pub c_bar: Option<f64>,
    pub x3_1: f64,
    pub x3_2: f64,
    /// Upper end of the lower linear region.
    pub x3_3: f64,
    /// Lower end of the upper linear region.
    pub x3_4: f64,
}

impl ClosedFormCoefficients {
    /// `f₂(c)`, clipping tiny negative radicands to zero.
    pub fn f2(&self, c: f64) -> f64 {
        let mut rad = self.u1 * c * c + 2.0 * self.u2 * c + self.u3;
        if (-RADICAND_CLIP..0.0).contains(&rad) {
            rad = 0.0;
        }
        1.0 + self.u0 * c + rad.sqrt()
    }
}

/// `(x₃⁽³⁾, x₃⁽⁴⁾)`: the edges of the middle region of the closed form.
pub fn region_thresholds(gamma1: f64, gamma2: f64) -> (f64, f64) {
    let Trig { s1, c1, s2, c2 } = Trig::new(gamma1, gamma2);
    let t2 = gamma2.tan();
    let den = 1.0 + c1 * (c2 - s2 * (c1 * s2 + s1 * s1 * t2));
    let num = |sign: f64| -s1 * (sign * s1 + (c1 * c2 + s1 * s1) * s2);
    (num(1.0) / den, num(-1.0) / den)
}

pub fn closed_form_coeffs(x3: f64, gamma1: f64, gamma2: f64) -> ClosedFormCoefficients {
    let Trig { s1, c1, s2, c2 } = Trig::new(gamma1, gamma2);
    let q = c2 * s1 - x3 * c1 * s2;
    let u0 = c1 * c2 + x3 * s1 * s2;
    let u1 = x3 * x3 - q * q;
    let u2 = (x3 * c1 * c2 + s1 * s2) * x3;
    let u3 = s1 * s1 + x3 * x3 * c1 * c1;
    let c_bar = (u1 < 0.0).then(|| {
        let num = u2 + s1 * u0 * (s1 - x3 * c1 * gamma2.tan());
        (-num / u1).clamp(-1.0, 1.0)
    });
    let (x3_3, x3_4) = region_thresholds(gamma1, gamma2);
    ClosedFormCoefficients {
        u0,
        u1,
        u2,
        u3,
        c_bar,
        x3_1: c2 * s1 / (1.0 + c1 * s2),
        x3_2: c2 * s1 / (-1.0 + c1 * s2),
        x3_3,
        x3_4,
    }
}

/// Region of the closed form that `x₃` falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum ClosedFormRegion {
    Lower,
    Middle,
    Upper,
}

pub fn closed_form_region(x3: f64, gamma1: f64, gamma2: f64) -> ClosedFormRegion {
    let (lo, hi) = region_thresholds(gamma1, gamma2);
    if x3 <= lo {
        ClosedFormRegion::Lower
    } else if x3 >= hi {
        ClosedFormRegion::Upper
    } else {
        ClosedFormRegion::Middle
    }
}

fn lower_branch(x3: f64, gamma1: f64, gamma2: f64) -> f64 {
    (1.0 - x3) * (1.0 + (gamma1 + gamma2).cos()) / 4.0
}

fn upper_branch(x3: f64, gamma1: f64, gamma2: f64) -> f64 {
    (1.0 + x3) * (1.0 + (gamma1 - gamma2).cos()) / 4.0
}

fn middle_branch(x3: f64, gamma1: f64, gamma2: f64) -> f64 {
    let Trig { s1, c1, s2, c2 } = Trig::new(gamma1, gamma2);
    let q = c2 * s1 - x3 * c1 * s2;
    (1.0 - x3 * x3) * s1 * c2 * q / (-2.0 * (x3 * x3 - q * q))
}

/// Closed-form `g` for `x₁ = x₂ = 0`: linear for `x₃ ≤ x₃⁽³⁾` and
/// `x₃ ≥ x₃⁽⁴⁾`, rational in between. Threshold points take the linear value.
pub fn g_closed_form(x3: f64, gamma1: f64, gamma2: f64) -> f64 {
    let (lo, hi) = region_thresholds(gamma1, gamma2);
    let linear = if x3 <= lo {
        lower_branch(x3, gamma1, gamma2)
    } else if x3 >= hi {
        upper_branch(x3, gamma1, gamma2)
    } else {
        return middle_branch(x3, gamma1, gamma2);
    };
    if x3 == lo || x3 == hi {
        let middle = middle_branch(x3, gamma1, gamma2);
        debug_assert!(
            !middle.is_finite() || (middle - linear).abs() <= 1e-9,
            "branches disagree at threshold: {middle} vs {linear}"
        );
    }
    linear
}

/// `g` of the two-qubit reduced state of a three-qubit pure state, which
/// equals its `G²` whichever party is traced out.
pub fn g_from_pure_3qubit(psi: &PureState, traced_party: usize) -> Result<f64> {
    if psi.n_qubits() != 3 {
        return Err(GmError::param(alloc::format!(
            "expected a three-qubit state, got {} qubits",
            psi.n_qubits()
        )));
    }
    let rho = psi.reduced_pair(traced_party)?;
    g_mixed_oracle(&rho, &OracleConfig::default())
}

/// `tr[ρ (ρ₁⊗ρ₂)]` for explicit Bloch vectors, as a cross-check.
pub fn product_expectation(rho: &Matrix4, s1: &[f64; 3], s2: &[f64; 3]) -> f64 {
    use crate::linalg::bloch_projector;
    let p = Matrix4::kron(&bloch_projector(s1), &bloch_projector(s2));
    let t: C64 = (*rho * p).trace();
    t.re
}
