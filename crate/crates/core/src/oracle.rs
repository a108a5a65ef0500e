//! Brute-force reference solvers.
//!
//! - [`gm_pure_oracle`]: alternating single-party optimization of the
//!   product-state overlap, from seeded random starts.
//! - [`gm_symmetric_oracle`]: dense two-angle search over symmetric
//!   product states `|a⟩^{⊗N}`.
//! - [`g_mixed_oracle`]: `max tr[ρ(ρ₁⊗ρ₂)]` for a two-qubit density matrix,
//!   via a sphere search over `ρ₁` with the inner maximization over `ρ₂`
//!   done exactly as a largest eigenvalue. No alternating steps are used, so
//!   it fails independently of the pure oracle.

use alloc::vec;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{GmError, Result};
use crate::linalg::{bloch_projector, max_eig_hermitian2, top_eigvec_hermitian2, Matrix4};
use crate::math::{powu, sqrt_binomial, Float, C64, FRAC_PI_2, TAU};
use crate::optimize::{maximize_on_sphere, refine_grid_peaks, Grid2};
use crate::rng::XorShift64Star;
use crate::states::{BlochVector, GmResult, Method, OracleStats, PureState, SymmetricDickeState};

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct OracleConfig {
    pub restarts: usize,
    pub max_iters: usize,
    pub tol: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            restarts: 32,
            max_iters: 500,
            tol: 1e-12,
            seed: 0x5EED_0F_6EE,
        }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        OracleConfig {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 || self.max_iters == 0 {
            return Err(GmError::param("restarts and max_iters must be positive"));
        }
        if !(self.tol > 0.0) {
            return Err(GmError::param("tol must be positive"));
        }
        Ok(())
    }
}

/// Outcome of one alternating-optimization restart.
#[derive(Debug, Clone, PartialEq)]
pub struct RestartOutcome {
    pub index: usize,
    pub overlap: f64,
    pub kets: Vec<[C64; 2]>,
    pub sweeps: usize,
    pub converged: bool,
}

/// Contracts every party except `keep` against `conj(kets)`.
fn contract_all_but(amps: &[C64], n: usize, kets: &[[C64; 2]], keep: usize) -> [C64; 2] {
    let mut cur: Vec<C64> = amps.to_vec();
    // Trailing parties sit in the low bits: fold them in one at a time.
    for q in (keep + 1..n).rev() {
        let (c0, c1) = (kets[q][0].conj(), kets[q][1].conj());
        let half = cur.len() / 2;
        for i in 0..half {
            cur[i] = c0 * cur[2 * i] + c1 * cur[2 * i + 1];
        }
        cur.truncate(half);
    }
    // Leading parties are now the high bits.
    for ket in kets.iter().take(keep) {
        let (c0, c1) = (ket[0].conj(), ket[1].conj());
        let half = cur.len() / 2;
        for i in 0..half {
            cur[i] = c0 * cur[i] + c1 * cur[i + half];
        }
        cur.truncate(half);
    }
    [cur[0], cur[1]]
}

fn random_ket(rng: &mut XorShift64Star) -> [C64; 2] {
    let (theta, phi) = rng.sphere_angles();
    [
        C64::new((0.5 * theta).cos(), 0.0),
        C64::from_polar((0.5 * theta).sin(), phi),
    ]
}

/// Runs restart `index` of the alternating optimization.
///
/// Each sweep replaces every party in turn by its normalized partial
/// contraction with the state, which is the exact single-party optimum, so
/// the overlap never decreases.
pub fn pure_oracle_restart(psi: &PureState, cfg: &OracleConfig, index: usize) -> RestartOutcome {
    let n = psi.n_qubits();
    let amps = psi.amplitudes();
    let mut rng = XorShift64Star::stream(cfg.seed, index as u64);
    let mut kets: Vec<[C64; 2]> = (0..n).map(|_| random_ket(&mut rng)).collect();

    let mut overlap = 0.0;
    let mut sweeps = 0;
    let mut converged = false;
    while sweeps < cfg.max_iters {
        sweeps += 1;
        let mut last = 0.0;
        for k in 0..n {
            let v = contract_all_but(amps, n, &kets, k);
            let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
            last = norm;
            if norm > 0.0 {
                kets[k] = [v[0] / norm, v[1] / norm];
            }
        }
        debug_assert!(last >= overlap - 1e-12, "overlap decreased: {overlap} -> {last}");
        let improvement = last - overlap;
        overlap = overlap.max(last);
        if improvement < cfg.tol {
            converged = true;
            break;
        }
    }
    RestartOutcome {
        index,
        overlap,
        kets,
        sweeps,
        converged,
    }
}

/// Reduces restart outcomes: largest overlap, ties to the lowest index.
pub fn reduce_restarts(outcomes: &[RestartOutcome]) -> Option<GmResult> {
    let best = outcomes.iter().fold(None::<&RestartOutcome>, |acc, o| match acc {
        Some(b) if o.overlap > b.overlap || (o.overlap == b.overlap && o.index < b.index) => Some(o),
        Some(b) => Some(b),
        None => Some(o),
    })?;
    let g = best.overlap.min(1.0);
    let mut result = GmResult::from_g_squared(g * g, Method::Oracle)
        .with_closest_product(best.kets.iter().map(BlochVector::from_ket).collect());
    let converged = outcomes.iter().filter(|o| o.converged).count();
    result.flags.non_converged = converged == 0;
    result.oracle_stats = Some(OracleStats {
        restarts: outcomes.len(),
        converged_restarts: converged,
        best_restart: best.index,
        total_sweeps: outcomes.iter().map(|o| o.sweeps).sum(),
    });
    Some(result)
}

/// GM of an arbitrary dense pure state by alternating optimization.
pub fn gm_pure_oracle(psi: &PureState, cfg: &OracleConfig) -> Result<GmResult> {
    cfg.validate()?;
    let outcomes: Vec<RestartOutcome> = (0..cfg.restarts)
        .map(|r| pure_oracle_restart(psi, cfg, r))
        .collect();
    Ok(reduce_restarts(&outcomes).expect("at least one restart"))
}

/// Best symmetric product state `cos α|0⟩ + e^{iθ} sin α|1⟩` found by the
/// symmetric oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricOptimum {
    pub alpha: f64,
    pub theta: f64,
    pub g_squared: f64,
}

/// Grid resolution of the symmetric oracle along each angle.
pub const SYMMETRIC_GRID: usize = 1024;

/// Maximizes `|⟨a|^{⊗N}|ψ⟩|²` over the two angles of `|a⟩`.
pub fn symmetric_oracle_search(state: &SymmetricDickeState, cfg: &OracleConfig) -> SymmetricOptimum {
    let n = state.n_qubits();
    let weighted: Vec<C64> = state
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(m, a)| a * sqrt_binomial(n, m))
        .collect();
    let overlap_sq = |alpha: f64, theta: f64| {
        let (s, c) = alpha.sin_cos();
        let mut acc = C64::new(0.0, 0.0);
        for (m, w) in weighted.iter().enumerate() {
            let phase = C64::from_polar(1.0, -(m as f64) * theta);
            acc += w * phase * (powu(c, n - m) * powu(s, m));
        }
        acc.norm_sqr()
    };

    // Tables for the grid pass: radial factors per α and phases per θ.
    let grid = Grid2 {
        x_range: (0.0, FRAC_PI_2),
        y_range: (0.0, TAU),
        nx: SYMMETRIC_GRID,
        ny: SYMMETRIC_GRID,
        y_periodic: true,
    };
    let radial: Vec<Vec<C64>> = (0..grid.nx)
        .map(|i| {
            let alpha = FRAC_PI_2 * i as f64 / (grid.nx - 1) as f64;
            let (s, c) = alpha.sin_cos();
            weighted
                .iter()
                .enumerate()
                .map(|(m, w)| w * (powu(c, n - m) * powu(s, m)))
                .collect()
        })
        .collect();
    let phases: Vec<Vec<C64>> = (0..grid.ny)
        .map(|j| {
            let theta = TAU * j as f64 / grid.ny as f64;
            (0..=n).map(|m| C64::from_polar(1.0, -(m as f64) * theta)).collect()
        })
        .collect();
    let mut values = Vec::with_capacity(grid.nx * grid.ny);
    for r in &radial {
        for ph in &phases {
            let acc: C64 = r.iter().zip(ph.iter()).map(|(a, b)| a * b).sum();
            values.push(acc.norm_sqr());
        }
    }

    let tol = cfg.tol.max(1e-14);
    let (p, v) = refine_grid_peaks(|[alpha, theta]| overlap_sq(alpha, theta), &grid, &values, 8, tol);
    let (p, v) = polish_stationary(&weighted, p, v, &overlap_sq);
    SymmetricOptimum {
        alpha: p[0],
        theta: p[1],
        g_squared: v.min(1.0),
    }
}

/// Gradient of `|⟨a|^{⊗N}|ψ⟩|²` in `(α, θ)`.
fn overlap_gradient(weighted: &[C64], alpha: f64, theta: f64) -> [f64; 2] {
    let n = weighted.len() - 1;
    let (s, c) = alpha.sin_cos();
    let (mut a, mut da, mut dt) = (C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0));
    for (m, w) in weighted.iter().enumerate() {
        let term = w * C64::from_polar(1.0, -(m as f64) * theta);
        let radial = powu(c, n - m) * powu(s, m);
        let mut d_radial = 0.0;
        if m > 0 {
            d_radial += m as f64 * powu(c, n - m + 1) * powu(s, m - 1);
        }
        if m < n {
            d_radial -= (n - m) as f64 * powu(c, n - m - 1) * powu(s, m + 1);
        }
        a += term * radial;
        da += term * d_radial;
        dt += term * C64::new(0.0, -(m as f64)) * radial;
    }
    [2.0 * (a.conj() * da).re, 2.0 * (a.conj() * dt).re]
}

/// Newton iterations on the gradient, started from a refined peak. Value
/// comparisons resolve the maximizer only to `~√ε`; zeroing the gradient
/// pins it down to `~ε`. Steps that leave the neighbourhood or lose value
/// are rejected.
fn polish_stationary<F: Fn(f64, f64) -> f64>(weighted: &[C64], p: [f64; 2], v: f64, f: &F) -> ([f64; 2], f64) {
    const H: f64 = 1e-6;
    let (mut p, mut v) = (p, v);
    for _ in 0..6 {
        let g = overlap_gradient(weighted, p[0], p[1]);
        let col = |k: usize| {
            let (mut lo, mut hi) = (p, p);
            lo[k] -= H;
            hi[k] += H;
            let (gl, gh) = (overlap_gradient(weighted, lo[0], lo[1]), overlap_gradient(weighted, hi[0], hi[1]));
            [(gh[0] - gl[0]) / (2.0 * H), (gh[1] - gl[1]) / (2.0 * H)]
        };
        let (c0, c1) = (col(0), col(1));
        let (h00, h11, h01) = (c0[0], c1[1], 0.5 * (c0[1] + c1[0]));
        let det = h00 * h11 - h01 * h01;
        // Only a negative-definite Hessian describes a maximum.
        if !(h00 < 0.0 && det > 0.0) {
            break;
        }
        let step = [(-h11 * g[0] + h01 * g[1]) / det, (h01 * g[0] - h00 * g[1]) / det];
        if step[0].abs().max(step[1].abs()) > 1e-4 {
            break;
        }
        let next = [p[0] + step[0], p[1] + step[1]];
        if !(0.0..=FRAC_PI_2).contains(&next[0]) {
            break;
        }
        let nv = f(next[0], next[1]);
        if nv < v - 4.0 * f64::EPSILON * v.abs() {
            break;
        }
        let done = step[0] == 0.0 && step[1] == 0.0;
        (p, v) = (next, nv);
        if done {
            break;
        }
    }
    (p, v)
}

/// GM of a symmetric state over symmetric product states.
pub fn gm_symmetric_oracle(state: &SymmetricDickeState, cfg: &OracleConfig) -> GmResult {
    let opt = symmetric_oracle_search(state, cfg);
    let party = BlochVector::from_angles(2.0 * opt.alpha, opt.theta);
    GmResult::from_g_squared(opt.g_squared, Method::Oracle)
        .with_closest_product(vec![party; state.n_qubits()])
}

/// Tolerance for the density-matrix checks in [`g_mixed_oracle`].
pub const DENSITY_TOL: f64 = 1e-8;

/// Checks Hermiticity, unit trace and positivity within [`DENSITY_TOL`].
pub fn validate_density(rho: &Matrix4) -> Result<()> {
    let defect = rho.hermiticity_defect();
    if defect > DENSITY_TOL {
        return Err(GmError::NotDensityMatrix(alloc::format!(
            "not Hermitian (defect {defect:e})"
        )));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > DENSITY_TOL || tr.im.abs() > DENSITY_TOL {
        return Err(GmError::NotDensityMatrix(alloc::format!("trace {tr} is not 1")));
    }
    let min = rho.hermitian_eigenvalues()[0];
    if min < -DENSITY_TOL {
        return Err(GmError::NotDensityMatrix(alloc::format!(
            "negative eigenvalue {min:e}"
        )));
    }
    Ok(())
}

/// Maximizer of `tr[ρ(ρ₁⊗ρ₂)]` over pure product states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedOptimum {
    pub g: f64,
    pub s1: [f64; 3],
    pub s2: [f64; 3],
}

/// Full optimum of the mixed oracle, including both Bloch vectors.
pub fn mixed_oracle_optimum(rho: &Matrix4, cfg: &OracleConfig) -> Result<MixedOptimum> {
    validate_density(rho)?;
    let tol = cfg.tol.max(1e-10);
    let (s1, g) = maximize_on_sphere(
        |s| max_eig_hermitian2(&rho.condition_first(&bloch_projector(s))),
        256,
        512,
        8,
        tol,
    );
    let conditional = rho.condition_first(&bloch_projector(&s1));
    let s2 = crate::linalg::ket_bloch(&top_eigvec_hermitian2(&conditional));
    Ok(MixedOptimum { g, s1, s2 })
}

/// `g(ρ) = max tr[ρ(ρ₁⊗ρ₂)]` for a two-qubit density matrix.
pub fn g_mixed_oracle(rho: &Matrix4, cfg: &OracleConfig) -> Result<f64> {
    Ok(mixed_oracle_optimum(rho, cfg)?.g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::dicke_to_dense;

    fn dense(a: &[f64]) -> PureState {
        dicke_to_dense(&SymmetricDickeState::from_real(a).unwrap()).unwrap()
    }

    #[test]
    fn contraction_matches_direct_sum() {
        let psi = dense(&[0.3, 0.5, 0.4, (1.0f64 - 0.5).sqrt()]);
        let mut rng = XorShift64Star::new(3);
        let kets: Vec<[C64; 2]> = (0..3).map(|_| random_ket(&mut rng)).collect();
        for keep in 0..3 {
            let v = contract_all_but(psi.amplitudes(), 3, &kets, keep);
            for b in 0..2 {
                let mut acc = C64::new(0.0, 0.0);
                for (idx, a) in psi.amplitudes().iter().enumerate() {
                    if (idx >> (2 - keep)) & 1 != b {
                        continue;
                    }
                    let mut w = *a;
                    for q in (0..3).filter(|&q| q != keep) {
                        w *= kets[q][(idx >> (2 - q)) & 1].conj();
                    }
                    acc += w;
                }
                assert!((acc - v[b]).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn pure_oracle_examples() {
        let cfg = OracleConfig::default();
        let p = gm_pure_oracle(&dense(&[1.0, 0.0, 0.0, 0.0]), &cfg).unwrap();
        assert!((p.g - 1.0).abs() < 1e-12);
        let w = gm_pure_oracle(&dense(&[0.0, 1.0, 0.0, 0.0]), &cfg).unwrap();
        assert!((w.g_squared - 4.0 / 9.0).abs() < 1e-9);
        let h = 0.5f64.sqrt();
        let ghz = gm_pure_oracle(&dense(&[h, 0.0, 0.0, h]), &cfg).unwrap();
        assert!((ghz.g_squared - 0.5).abs() < 1e-9);
        assert!(!ghz.flags.non_converged);
    }

    #[test]
    fn deterministic_and_restart_monotone() {
        let psi = dense(&[0.2, 0.6, 0.3, (1.0f64 - 0.49).sqrt()]);
        let few = OracleConfig { restarts: 2, ..OracleConfig::with_seed(9) };
        let many = OracleConfig { restarts: 16, ..few };
        let a = gm_pure_oracle(&psi, &few).unwrap();
        let b = gm_pure_oracle(&psi, &few).unwrap();
        assert_eq!(a.g.to_bits(), b.g.to_bits());
        assert!(gm_pure_oracle(&psi, &many).unwrap().g >= a.g);
    }

    #[test]
    fn non_convergence_is_flagged() {
        let psi = dense(&[0.0, 1.0, 0.0, 0.0]);
        let cfg = OracleConfig { restarts: 3, max_iters: 1, tol: 1e-300, seed: 1 };
        assert!(gm_pure_oracle(&psi, &cfg).unwrap().flags.non_converged);
    }

    #[test]
    fn symmetric_oracle_w_and_phase() {
        let cfg = OracleConfig::default();
        let w = SymmetricDickeState::basis(3, 1).unwrap();
        assert!((gm_symmetric_oracle(&w, &cfg).g_squared - 4.0 / 9.0).abs() < 1e-12);
        let s = SymmetricDickeState::from_real(&[0.5, 0.3, 0.6, (1.0f64 - 0.7).sqrt()]).unwrap();
        let opt = symmetric_oracle_search(&s, &cfg);
        assert!(crate::math::wrap_pi(opt.theta).abs() < 1e-8);
    }

    #[test]
    fn mixed_oracle_examples() {
        let cfg = OracleConfig::default();
        let mixed = Matrix4::identity().scale(0.25);
        assert!((g_mixed_oracle(&mixed, &cfg).unwrap() - 0.25).abs() < 1e-12);

        let h = 0.5f64.sqrt();
        let mut bell = Matrix4::zeros();
        for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            bell.0[i][j] = C64::new(h * h, 0.0);
        }
        assert!((g_mixed_oracle(&bell, &cfg).unwrap() - 0.5).abs() < 1e-10);

        let mut bad = Matrix4::zeros();
        bad.0[0][0] = C64::new(1.5, 0.0);
        bad.0[1][1] = C64::new(-0.5, 0.0);
        assert!(matches!(g_mixed_oracle(&bad, &cfg), Err(GmError::NotDensityMatrix(_))));
    }
}
