//! State representations, their validation, and conversions to the dense
//! objects consumed by the oracles.
//!
//! Basis convention: qubit 0 is the most significant bit of a computational
//! basis index, so `|q₀ q₁ … q_{n−1}⟩` sits at index `Σ q_k 2^{n−1−k}`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{GmError, Result};
use crate::linalg::{ket_bloch, Mat2, Matrix4};
use crate::math::{sqrt_binomial, Float, C64, FRAC_PI_2};

/// Largest qubit count accepted in dense form.
pub const MAX_DENSE_QUBITS: usize = 20;

/// Norm deviations above this are rejected; smaller ones are renormalized.
pub const NORM_TOLERANCE: f64 = 1e-6;

/// Imaginary parts below this count as zero when classifying amplitudes.
pub const IMAG_TOLERANCE: f64 = 1e-12;

const ANGLE_SLACK: f64 = 1e-12;

fn renormalize(amplitudes: &mut [C64]) -> Result<()> {
    let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if !norm.is_finite() || (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(GmError::Normalization { norm });
    }
    for a in amplitudes.iter_mut() {
        *a /= norm;
    }
    Ok(())
}

/// Dense pure state of `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<C64>,
}

impl PureState {
    pub fn new(n_qubits: usize, mut amplitudes: Vec<C64>) -> Result<Self> {
        if n_qubits == 0 {
            return Err(GmError::param("a pure state needs at least one qubit"));
        }
        if n_qubits > MAX_DENSE_QUBITS {
            return Err(GmError::Capacity {
                n_qubits,
                max: MAX_DENSE_QUBITS,
            });
        }
        let expected = 1usize << n_qubits;
        if amplitudes.len() != expected {
            return Err(GmError::Length {
                expected,
                got: amplitudes.len(),
            });
        }
        renormalize(&mut amplitudes)?;
        Ok(PureState {
            n_qubits,
            amplitudes,
        })
    }

    /// Infers the qubit count from the amplitude count.
    pub fn from_amplitudes(amplitudes: Vec<C64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(GmError::Length {
                expected: len.next_power_of_two().max(2),
                got: len,
            });
        }
        Self::new(len.trailing_zeros() as usize, amplitudes)
    }

    /// Product state `|a₀⟩|a₁⟩…`.
    pub fn product(kets: &[[C64; 2]]) -> Result<Self> {
        let n = kets.len();
        if n > MAX_DENSE_QUBITS {
            return Err(GmError::Capacity {
                n_qubits: n,
                max: MAX_DENSE_QUBITS,
            });
        }
        let mut amps = vec![C64::new(1.0, 0.0)];
        for ket in kets {
            let mut next = Vec::with_capacity(amps.len() * 2);
            for a in &amps {
                next.push(*a * ket[0]);
                next.push(*a * ket[1]);
            }
            amps = next;
        }
        Self::new(n, amps)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> C64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Relabels qubits: qubit `k` of the result is qubit `perm[k]` of `self`.
    pub fn permute_qubits(&self, perm: &[usize]) -> Result<PureState> {
        let n = self.n_qubits;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || core::mem::replace(&mut seen[p], true)) {
            return Err(GmError::param("qubit permutation is not a bijection"));
        }
        let mut out = vec![C64::new(0.0, 0.0); self.amplitudes.len()];
        for (idx, slot) in out.iter_mut().enumerate() {
            let mut src = 0usize;
            for (k, &p) in perm.iter().enumerate() {
                let bit = (idx >> (n - 1 - k)) & 1;
                src |= bit << (n - 1 - p);
            }
            *slot = self.amplitudes[src];
        }
        Ok(PureState {
            n_qubits: n,
            amplitudes: out,
        })
    }

    /// Applies the single-qubit operator `u` to `qubit`.
    pub fn apply_local(&self, qubit: usize, u: &Mat2) -> Result<PureState> {
        if qubit >= self.n_qubits {
            return Err(GmError::param(format!("qubit {qubit} out of range")));
        }
        let shift = self.n_qubits - 1 - qubit;
        let mut out = self.amplitudes.clone();
        for idx in 0..out.len() {
            if (idx >> shift) & 1 == 0 {
                let j = idx | (1 << shift);
                let (a0, a1) = (self.amplitudes[idx], self.amplitudes[j]);
                out[idx] = u[0][0] * a0 + u[0][1] * a1;
                out[j] = u[1][0] * a0 + u[1][1] * a1;
            }
        }
        let mut amps = out;
        renormalize(&mut amps)?;
        Ok(PureState {
            n_qubits: self.n_qubits,
            amplitudes: amps,
        })
    }

    /// Two-qubit reduced density matrix of a three-qubit state after tracing
    /// out `traced`; the remaining qubits keep their relative order.
    pub fn reduced_pair(&self, traced: usize) -> Result<Matrix4> {
        if self.n_qubits != 3 {
            return Err(GmError::param(format!(
                "two-qubit reduction needs a three-qubit state, got {} qubits",
                self.n_qubits
            )));
        }
        if traced > 2 {
            return Err(GmError::param(format!("party {traced} out of range")));
        }
        let keep: Vec<usize> = (0..3).filter(|&q| q != traced).collect();
        let index = |pair: usize, c: usize| {
            let bits = [(keep[0], pair >> 1), (keep[1], pair & 1), (traced, c)];
            bits.iter().fold(0usize, |acc, &(q, b)| acc | (b << (2 - q)))
        };
        let mut rho = Matrix4::zeros();
        for r in 0..4 {
            for s in 0..4 {
                let mut acc = C64::new(0.0, 0.0);
                for c in 0..2 {
                    acc += self.amplitudes[index(r, c)] * self.amplitudes[index(s, c)].conj();
                }
                rho.0[r][s] = acc;
            }
        }
        Ok(rho)
    }
}

/// Symmetric state `Σ_m a_m |m, N⟩` in the Dicke basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricDickeState {
    n: usize,
    amplitudes: Vec<C64>,
    non_negative: bool,
}

impl SymmetricDickeState {
    /// `amplitudes[m]` multiplies `|m, N⟩` with `N = amplitudes.len() − 1`.
    pub fn new(mut amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.len() < 2 {
            return Err(GmError::param("a Dicke state needs at least one qubit"));
        }
        renormalize(&mut amplitudes)?;
        let non_negative = amplitudes
            .iter()
            .all(|a| a.im.abs() <= IMAG_TOLERANCE && a.re >= 0.0);
        Ok(SymmetricDickeState {
            n: amplitudes.len() - 1,
            amplitudes,
            non_negative,
        })
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&a| C64::new(a, 0.0)).collect())
    }

    /// The single Dicke state `|m, N⟩`.
    pub fn basis(n: usize, m: usize) -> Result<Self> {
        if m > n {
            return Err(GmError::param(format!("excitation {m} exceeds {n} qubits")));
        }
        let mut a = vec![0.0; n + 1];
        a[m] = 1.0;
        Self::from_real(&a)
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// True iff every amplitude is real and non-negative.
    pub fn is_non_negative(&self) -> bool {
        self.non_negative
    }

    /// Real parts, available when the state is non-negative.
    pub fn real_amplitudes(&self) -> Option<Vec<f64>> {
        self.non_negative
            .then(|| self.amplitudes.iter().map(|a| a.re).collect())
    }

    /// `a_m → a_{N−m}`, i.e. the state after `X` on every qubit.
    pub fn reversed(&self) -> Self {
        let mut amplitudes = self.amplitudes.clone();
        amplitudes.reverse();
        SymmetricDickeState {
            n: self.n,
            amplitudes,
            non_negative: self.non_negative,
        }
    }

    pub fn to_dense(&self) -> Result<PureState> {
        dicke_to_dense(self)
    }
}

/// Expands a Dicke-basis state into the `2^N` computational amplitudes.
pub fn dicke_to_dense(state: &SymmetricDickeState) -> Result<PureState> {
    let n = state.n;
    if n > MAX_DENSE_QUBITS {
        return Err(GmError::Capacity {
            n_qubits: n,
            max: MAX_DENSE_QUBITS,
        });
    }
    let weights: Vec<C64> = (0..=n)
        .map(|m| state.amplitudes[m] / sqrt_binomial(n, m))
        .collect();
    let amps = (0..1usize << n)
        .map(|idx| weights[idx.count_ones() as usize])
        .collect();
    PureState::new(n, amps)
}

/// Canonical symmetric three-qubit state
/// `g|000⟩ + t(|011⟩ + |101⟩ + |110⟩) + e^{iγ} h |111⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct SymThreeQubitCanonical {
    pub g: f64,
    pub t: f64,
    pub h: f64,
    pub gamma: f64,
}

impl SymThreeQubitCanonical {
    pub fn new(g: f64, t: f64, h: f64, gamma: f64) -> Result<Self> {
        Self::check_ranges(g, t, h, gamma)?;
        let norm = (g * g + 3.0 * t * t + h * h).sqrt();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(GmError::Normalization { norm });
        }
        Ok(SymThreeQubitCanonical {
            g: g / norm,
            t: t / norm,
            h: h / norm,
            gamma,
        })
    }

    /// Projects `(g, t, h)` onto `g² + 3t² + h² = 1`.
    pub fn renormalized(g: f64, t: f64, h: f64, gamma: f64) -> Result<Self> {
        Self::check_ranges(g, t, h, gamma)?;
        let norm = (g * g + 3.0 * t * t + h * h).sqrt();
        if norm <= 0.0 || !norm.is_finite() {
            return Err(GmError::Normalization { norm });
        }
        Ok(SymThreeQubitCanonical {
            g: g / norm,
            t: t / norm,
            h: h / norm,
            gamma,
        })
    }

    fn check_ranges(g: f64, t: f64, h: f64, gamma: f64) -> Result<()> {
        if [g, t, h, gamma].iter().any(|x| !x.is_finite()) {
            return Err(GmError::param("canonical parameters must be finite"));
        }
        if g < 0.0 || t < 0.0 || h < 0.0 {
            return Err(GmError::param("g, t and h must be non-negative"));
        }
        if gamma.abs() > FRAC_PI_2 + ANGLE_SLACK {
            return Err(GmError::param("gamma must lie in [-pi/2, pi/2]"));
        }
        Ok(())
    }

    /// `g, t, h > 0` and `γ ∉ {0, ±π/2}` (all within `tol`).
    pub fn is_generic(&self, tol: f64) -> bool {
        self.g > tol
            && self.t > tol
            && self.h > tol
            && self.gamma.abs() > tol
            && (self.gamma.abs() - FRAC_PI_2).abs() > tol
    }

    pub fn to_dense(&self) -> PureState {
        sym3q_to_dense(self)
    }

    /// Dicke amplitudes `(g, 0, √3 t, e^{iγ} h)`.
    pub fn to_dicke(&self) -> SymmetricDickeState {
        let amplitudes = vec![
            C64::new(self.g, 0.0),
            C64::new(0.0, 0.0),
            C64::new(3f64.sqrt() * self.t, 0.0),
            C64::from_polar(self.h, self.gamma),
        ];
        let non_negative = self.h == 0.0 || self.gamma == 0.0;
        SymmetricDickeState {
            n: 3,
            amplitudes,
            non_negative,
        }
    }
}

pub fn sym3q_to_dense(state: &SymThreeQubitCanonical) -> PureState {
    let mut amps = vec![C64::new(0.0, 0.0); 8];
    amps[0b000] = C64::new(state.g, 0.0);
    for idx in [0b011, 0b101, 0b110] {
        amps[idx] = C64::new(state.t, 0.0);
    }
    amps[0b111] = C64::from_polar(state.h, state.gamma);
    PureState {
        n_qubits: 3,
        amplitudes: amps,
    }
}

/// Two-qubit rank-two state in canonical form: the subspace angles
/// `(γ₁, γ₂)` and the Bloch vector `x` within that subspace.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct RankTwoCanonical {
    pub gamma1: f64,
    pub gamma2: f64,
    pub x: [f64; 3],
}

impl RankTwoCanonical {
    pub fn new(gamma1: f64, gamma2: f64, x: [f64; 3]) -> Result<Self> {
        if [gamma1, gamma2, x[0], x[1], x[2]].iter().any(|v| !v.is_finite()) {
            return Err(GmError::param("rank-two parameters must be finite"));
        }
        if gamma2 < -ANGLE_SLACK
            || gamma2 > gamma1 + ANGLE_SLACK
            || gamma1 > FRAC_PI_2 + ANGLE_SLACK
            || gamma1 + gamma2 > FRAC_PI_2 + ANGLE_SLACK
        {
            return Err(GmError::param(
                "angles must satisfy 0 <= gamma2 <= gamma1 and gamma1 + gamma2 <= pi/2",
            ));
        }
        let r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        if r2 > 1.0 + 1e-12 {
            return Err(GmError::param(format!("Bloch vector length {} exceeds 1", r2.sqrt())));
        }
        Ok(RankTwoCanonical { gamma1, gamma2, x })
    }

    /// `x₁ = x₂ = 0` state on the given subspace.
    pub fn axial(gamma1: f64, gamma2: f64, x3: f64) -> Result<Self> {
        Self::new(gamma1, gamma2, [0.0, 0.0, x3])
    }
}

/// Unit Bloch vector `(a, b, c)` of a pure qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct BlochVector {
    pub s: [f64; 3],
}

impl BlochVector {
    pub fn new(s: [f64; 3]) -> Result<Self> {
        let n2 = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
        if (n2.sqrt() - 1.0).abs() > 1e-10 {
            return Err(GmError::param(format!("Bloch vector norm {} is not 1", n2.sqrt())));
        }
        Ok(BlochVector { s })
    }

    /// `(sinθ cosφ, sinθ sinφ, cosθ)`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        BlochVector {
            s: crate::optimize::sphere_point(theta, phi),
        }
    }

    pub fn from_ket(ket: &[C64; 2]) -> Self {
        BlochVector { s: ket_bloch(ket) }
    }

    /// `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
    pub fn to_ket(&self) -> [C64; 2] {
        let theta = self.s[2].clamp(-1.0, 1.0).acos();
        let phi = self.s[1].atan2(self.s[0]);
        [
            C64::new((0.5 * theta).cos(), 0.0),
            C64::from_polar((0.5 * theta).sin(), phi),
        ]
    }
}

/// Which solver produced a [`GmResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Method {
    Dicke,
    Sym3q,
    Rank2Closed,
    Rank2Numeric,
    Oracle,
}

/// Stationary-point family a symmetric three-qubit candidate came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum CaseTag {
    Case1,
    Case21,
    Case22,
    Case23,
}

/// One stationary point `(φ, θ)` with its multiplier and overlap value.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct CandidateRecord {
    pub phi: f64,
    pub theta: f64,
    pub lambda: f64,
    pub g_j_squared: f64,
    pub case_tag: CaseTag,
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ResultFlags {
    /// No oracle restart met the convergence tolerance.
    pub non_converged: bool,
    /// A boundary-regime cross-check replaced the analytic value.
    pub oracle_override: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct OracleStats {
    pub restarts: usize,
    pub converged_restarts: usize,
    pub best_restart: usize,
    pub total_sweeps: usize,
}

/// Outcome of a GM computation. `e_g = 1 − g_squared` by construction.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct GmResult {
    pub g: f64,
    pub g_squared: f64,
    pub e_g: f64,
    pub closest_product: Vec<BlochVector>,
    pub candidates: Vec<CandidateRecord>,
    pub method: Method,
    #[cfg_attr(feature = "serde", serde(default))]
    pub flags: ResultFlags,
    #[cfg_attr(feature = "serde", serde(default))]
    pub oracle_stats: Option<OracleStats>,
}

impl GmResult {
    /// Builds a result from `G²`, clamped into `[0, 1]`.
    pub fn from_g_squared(g_squared: f64, method: Method) -> Self {
        let g_squared = g_squared.clamp(0.0, 1.0);
        GmResult {
            g: g_squared.sqrt(),
            g_squared,
            e_g: 1.0 - g_squared,
            closest_product: Vec::new(),
            candidates: Vec::new(),
            method,
            flags: ResultFlags::default(),
            oracle_stats: None,
        }
    }

    pub fn with_closest_product(mut self, product: Vec<BlochVector>) -> Self {
        self.closest_product = product;
        self
    }
}
