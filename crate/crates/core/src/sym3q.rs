//! GM of symmetric three-qubit states in the canonical form
//! `g|000⟩ + t(|011⟩+|101⟩+|110⟩) + e^{iγ}h|111⟩`.
//!
//! The closest product state is `|a⟩^{⊗3}` with Bloch vector
//! `s = (sinθ cosφ, sinθ sinφ, cosθ)`, a stationary point of
//! `tr[ρ_AB (ρ_a⊗ρ_a)]` on the sphere: `r + Gs = λs`. The candidates are
//!
//! - the pole `θ = 0` (value `g²`);
//! - one explicit solution with `tan φ = (t+g)/(t−g)·tan γ`;
//! - the roots of two one-parameter families, where `θ(φ)` follows from one
//!   of two closed relations and `φ` from a 1-D root scan.
//!
//! The largest candidate value is `G²`.

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{GmError, Result};
use crate::linalg::{Matrix4, Mat2};
use crate::math::{wrap_tau, Float, FRAC_PI_2, FRAC_PI_4, PI, TAU};
use crate::optimize::bisect;
use crate::oracle::{symmetric_oracle_search, OracleConfig};
use crate::states::{
    BlochVector, CandidateRecord, CaseTag, GmResult, Method, PureState, SymThreeQubitCanonical,
};

/// Candidates must satisfy all three stationarity equations to this level.
pub const RESIDUAL_TOL: f64 = 1e-8;
/// Below this `|cos θ|`, `λ` comes from the first equation instead of the third.
pub const COS_THETA_SWITCH: f64 = 1e-8;
/// Poles of the `θ(φ)` relations closer than this are skipped.
pub const POLE_TOL: f64 = 1e-12;
/// Uniform samples per open quadrant in the root scan.
pub const SCAN_SAMPLES: usize = 4096;
/// Roots closer than this in both `φ` and `θ` are merged.
pub const DEDUPE_TOL: f64 = 1e-9;
/// Largest number of roots one family can have.
pub const MAX_ROOTS_PER_BRANCH: usize = 16;
/// Parameters within this of an excluded value put a state on the boundary.
pub const BOUNDARY_TOL: f64 = 1e-12;
/// Oracle values above the best candidate by more than this replace it.
pub const OVERRIDE_TOL: f64 = 1e-9;

const EPS_DEGENERATE: f64 = 1e-9;
const EPS_DENOMINATOR: f64 = 1e-12;
const THETA_MARGIN: f64 = 1e-6;
/// Log-spaced samples approaching each quadrant edge and each pole of
/// `θ(φ)`, where roots crowd together as `γ → 0`.
const EDGE_SAMPLES: usize = 160;
const EDGE_MIN_OFFSET: f64 = 1e-14;

/// Which closed relation fixes `θ` given `φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum Branch {
    /// `tan(θ/2) = g sin2φ / (h sin(γ−φ))`.
    A,
    /// `tan(θ/2) = −t sin2φ / (h sin(γ+φ))`.
    B,
}

impl Branch {
    pub fn case_tag(self) -> CaseTag {
        match self {
            Branch::A => CaseTag::Case22,
            Branch::B => CaseTag::Case23,
        }
    }
}

/// Left minus right sides of the three stationarity equations.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct StationaryResidual {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
}

impl StationaryResidual {
    pub fn max_abs(&self) -> f64 {
        self.r1.abs().max(self.r2.abs()).max(self.r3.abs())
    }
}

/// An azimuth stored as `kπ/2 + d` with `|d| ≤ π/4`, so that angles close
/// to a multiple of `π/2` keep full relative precision.
#[derive(Debug, Clone, Copy)]
struct Azimuth {
    k: u8,
    d: f64,
}

impl Azimuth {
    fn from_angle(phi: f64) -> Self {
        let k = (phi / FRAC_PI_2).round();
        Self { k: (k as i64).rem_euclid(4) as u8, d: phi - k * FRAC_PI_2 }
    }

    /// From `(sin φ, cos φ)`, without ever forming `φ` itself.
    fn from_sin_cos(s: f64, c: f64) -> Self {
        let (k, s, c) = if c.abs() >= s.abs() {
            if c > 0.0 { (0, s, c) } else { (2, -s, -c) }
        } else if s > 0.0 {
            (1, -c, s)
        } else {
            (3, c, -s)
        };
        Self { k, d: s.atan2(c) }
    }

    fn shifted_by_pi(self) -> Self {
        Self { k: (self.k + 2) % 4, d: self.d }
    }

    fn sin_cos(self) -> (f64, f64) {
        let (s, c) = self.d.sin_cos();
        match self.k {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    fn angle(self) -> f64 {
        wrap_tau(self.k as f64 * FRAC_PI_2 + self.d)
    }
}

/// Components of `r + Gs` at `(φ, θ)`.
pub fn stationarity_lhs(st: &SymThreeQubitCanonical, phi: f64, theta: f64) -> [f64; 3] {
    lhs_at(st, phi.sin_cos(), theta)
}

fn lhs_at(st: &SymThreeQubitCanonical, (sp, cp): (f64, f64), theta: f64) -> [f64; 3] {
    let SymThreeQubitCanonical { g, t, h, gamma } = *st;
    let (sg, cg) = gamma.sin_cos();
    let (sth, cth) = theta.sin_cos();
    [
        2.0 * h * t * cg + 2.0 * t * (g + t) * sth * cp - 2.0 * h * t * cg * cth,
        2.0 * h * t * sg - 2.0 * t * (g - t) * sth * sp - 2.0 * h * t * sg * cth,
        (g * g - t * t) * (1.0 + cth)
            - h * h * (1.0 - cth)
            - 2.0 * h * t * cg * sth * cp
            - 2.0 * h * t * sg * sth * sp,
    ]
}

/// Residuals after eliminating `λ`, together with that `λ`.
pub fn residuals(st: &SymThreeQubitCanonical, phi: f64, theta: f64) -> (StationaryResidual, f64) {
    residuals_at(st, phi.sin_cos(), theta)
}

fn residuals_at(st: &SymThreeQubitCanonical, (sp, cp): (f64, f64), theta: f64) -> (StationaryResidual, f64) {
    let lhs = lhs_at(st, (sp, cp), theta);
    let (sth, cth) = theta.sin_cos();
    let s = [sth * cp, sth * sp, cth];
    let lambda = if cth.abs() > COS_THETA_SWITCH {
        lhs[2] / cth
    } else {
        lhs[0] / s[0]
    };
    (
        StationaryResidual {
            r1: lhs[0] - lambda * s[0],
            r2: lhs[1] - lambda * s[1],
            r3: lhs[2] - lambda * s[2],
        },
        lambda,
    )
}

/// `θ ∈ (0, π)` on the given branch, or `None` where the relation has no
/// admissible solution.
pub fn theta_from_phi(st: &SymThreeQubitCanonical, phi: f64, branch: Branch) -> Option<f64> {
    theta_at(st, phi.sin_cos(), branch)
}

fn theta_at(st: &SymThreeQubitCanonical, (sp, cp): (f64, f64), branch: Branch) -> Option<f64> {
    let (sg, cg) = st.gamma.sin_cos();
    let s2 = 2.0 * sp * cp;
    let (num, den) = match branch {
        Branch::A => (st.g, st.h * (sg * cp - cg * sp)),
        Branch::B => (-st.t, st.h * (sg * cp + cg * sp)),
    };
    if s2.abs() < POLE_TOL || den.abs() < POLE_TOL {
        return None;
    }
    let rhs = num * s2 / den;
    if !(rhs > 0.0) || !rhs.is_finite() {
        return None;
    }
    let theta = 2.0 * rhs.atan();
    (theta < PI).then_some(theta)
}

/// `G_j²` at an arbitrary `(φ, θ)`: equal to `tr[ρ_AB (ρ_a⊗ρ_a)]`, and to
/// the overlap `|⟨aaa|Φ⟩|²` at stationary points.
pub fn gm_candidate(st: &SymThreeQubitCanonical, phi: f64, theta: f64) -> f64 {
    candidate_at(st, phi.sin_cos(), theta)
}

fn candidate_at(st: &SymThreeQubitCanonical, (sp, cp): (f64, f64), theta: f64) -> f64 {
    let SymThreeQubitCanonical { g, t, h, gamma } = *st;
    let (sg, cg) = gamma.sin_cos();
    let cos_2phi = (cp - sp) * (cp + sp);
    let cos_gamma_phi = cg * cp + sg * sp;
    let (t2, h2) = (t * t, h * h);
    let (sh, ch) = (0.5 * theta).sin_cos();
    (3.0 - 2.0 * t2
        + 4.0 * (1.0 - 2.0 * h2 - 4.0 * t2) * theta.cos()
        + (1.0 - 6.0 * t2) * (2.0 * theta).cos()
        + 4.0 * g * t * cos_2phi * theta.sin().powi(2)
        + 32.0 * h * t * cos_gamma_phi * ch * sh.powi(3))
        / 8.0
}

fn record(st: &SymThreeQubitCanonical, phi: Azimuth, theta: f64, case_tag: CaseTag) -> CandidateRecord {
    let sc = phi.sin_cos();
    let (res, lambda) = residuals_at(st, sc, theta);
    CandidateRecord {
        phi: phi.angle(),
        theta,
        lambda,
        g_j_squared: candidate_at(st, sc, theta),
        case_tag,
        residual: res.max_abs(),
    }
}

/// The `θ = 0` candidate, `G² = g²`.
pub fn candidate_case1(st: &SymThreeQubitCanonical) -> CandidateRecord {
    // s = (0,0,1): λ is the third component of r + Gs, the other two are
    // the residual.
    let lhs = stationarity_lhs(st, 0.0, 0.0);
    CandidateRecord {
        phi: 0.0,
        theta: 0.0,
        lambda: lhs[2],
        g_j_squared: st.g * st.g,
        case_tag: CaseTag::Case1,
        residual: lhs[0].abs().max(lhs[1].abs()),
    }
}

/// Why the explicit candidate was not produced.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum SkipReason {
    /// Outside `g, t, h > 0`, `γ ∉ {0, ±π/2}`.
    NotGeneric,
    /// `|t − g|` too small.
    Degenerate,
    /// The value formula's denominator vanishes.
    VanishingDenominator,
    /// Neither `φ` choice yields admissible `θ` on both branches.
    NoAdmissibleTheta,
    /// The two branches give different `θ`.
    BranchMismatch { delta: f64 },
    /// The point fails the stationarity check.
    Residual { residual: f64 },
}

/// The explicit candidate with `tan φ = (t+g)/(t−g)·tan γ`, whose value is
/// `g² − (g²−t²)³ / (t² − 2t⁴ + g² − 6g²t² − 2gth² cos2γ)`.
pub fn candidate_case21(st: &SymThreeQubitCanonical) -> core::result::Result<CandidateRecord, SkipReason> {
    if !st.is_generic(BOUNDARY_TOL) {
        return Err(SkipReason::NotGeneric);
    }
    let SymThreeQubitCanonical { g, t, h, gamma } = *st;
    if (t - g).abs() <= EPS_DEGENERATE {
        return Err(SkipReason::Degenerate);
    }
    let (g2, t2) = (g * g, t * t);
    let den = t2 - 2.0 * t2 * t2 + g2 - 6.0 * g2 * t2 - 2.0 * g * t * h * h * (2.0 * gamma).cos();
    if den.abs() <= EPS_DENOMINATOR {
        return Err(SkipReason::VanishingDenominator);
    }
    let value = g2 - (g2 - t2).powi(3) / den;

    let phi0 = Azimuth::from_angle(((t + g) / (t - g) * gamma.tan()).atan());
    let mut outcome = Err(SkipReason::NoAdmissibleTheta);
    for phi in [phi0, phi0.shifted_by_pi()] {
        let sc = phi.sin_cos();
        let (Some(ta), Some(tb)) = (theta_at(st, sc, Branch::A), theta_at(st, sc, Branch::B)) else {
            continue;
        };
        let delta = (ta - tb).abs();
        if delta > 1e-9 {
            outcome = Err(SkipReason::BranchMismatch { delta });
            continue;
        }
        let mut rec = record(st, phi, ta, CaseTag::Case21);
        if rec.residual > RESIDUAL_TOL {
            outcome = Err(SkipReason::Residual { residual: rec.residual });
            continue;
        }
        rec.g_j_squared = value;
        return Ok(rec);
    }
    outcome
}

/// Denominator-free combination of the first and third equations along the
/// branch curve; it vanishes exactly where they share one `λ`.
fn scan_function(st: &SymThreeQubitCanonical, phi: Azimuth, branch: Branch) -> Option<f64> {
    let sc = phi.sin_cos();
    let theta = theta_at(st, sc, branch)?;
    let lhs = lhs_at(st, sc, theta);
    let (sth, cth) = theta.sin_cos();
    Some(lhs[0] * cth - lhs[2] * sth * sc.1)
}

/// Points where the branch's `θ(φ)` relation has a pole (`θ → π`).
fn branch_poles(st: &SymThreeQubitCanonical, branch: Branch) -> [Azimuth; 2] {
    let (sg, cg) = st.gamma.sin_cos();
    let p = match branch {
        Branch::A => Azimuth::from_sin_cos(sg, cg),
        Branch::B => Azimuth::from_sin_cos(-sg, cg),
    };
    [p, p.shifted_by_pi()]
}

/// Scan offsets `d` for the half-quadrant of base `k` on the side `sign` of
/// `d = 0`: a uniform grid plus log-spaced points approaching `d = 0` and
/// each pole from both sides.
fn segment_samples(k: u8, sign: f64, poles: &[Azimuth]) -> Vec<f64> {
    let half = SCAN_SAMPLES / 2;
    let step = FRAC_PI_4 / half as f64;
    let (lmin, lmax) = (EDGE_MIN_OFFSET.ln(), step.ln());
    let offsets: Vec<f64> = (0..EDGE_SAMPLES - 1)
        .map(|i| (lmin + (lmax - lmin) * i as f64 / (EDGE_SAMPLES - 1) as f64).exp())
        .collect();
    let mut out: Vec<f64> = (1..=half).map(|i| sign * i as f64 * step).collect();
    out.extend(offsets.iter().map(|o| sign * o));
    for p in poles.iter().filter(|p| p.k == k) {
        out.extend(offsets.iter().flat_map(|o| [p.d - o, p.d + o]));
        out.push(p.d);
    }
    out.retain(|&d| 0.0 < sign * d && sign * d <= FRAC_PI_4);
    out.sort_by(|a, b| a.total_cmp(b));
    out.dedup();
    out
}

/// All stationary points on one branch with `φ` in the open quadrants.
///
/// Sign changes of the scan function are bisected to float precision and
/// kept if all three residuals are below [`RESIDUAL_TOL`]; near-duplicates
/// are merged and the list is sorted by `φ`.
pub fn find_case2_roots(st: &SymThreeQubitCanonical, branch: Branch) -> Vec<(f64, f64)> {
    case2_roots(st, branch).into_iter().map(|(p, t)| (p.angle(), t)).collect()
}

fn case2_roots(st: &SymThreeQubitCanonical, branch: Branch) -> Vec<(Azimuth, f64)> {
    let mut roots: Vec<Root> = Vec::new();
    let poles = branch_poles(st, branch);
    for k in 0..4u8 {
        for sign in [1.0, -1.0] {
            let f = |d: f64| scan_function(st, Azimuth { k, d }, branch);
            let mut prev: Option<(f64, f64)> = None;
            for d in segment_samples(k, sign, &poles) {
                let val = f(d);
                if let (Some(v), Some((d0, v0))) = (val, prev) {
                    if v == 0.0 || (v > 0.0) != (v0 > 0.0) {
                        let root = if v == 0.0 { Some(d) } else { bisect(f, d0, d, 0.0) };
                        if let Some(d_r) = root {
                            consider_root(st, branch, Azimuth { k, d: d_r }, &mut roots);
                        }
                    }
                }
                prev = val.map(|v| (d, v));
            }
        }
    }
    if roots.len() > MAX_ROOTS_PER_BRANCH {
        roots.sort_by(|a, b| a.residual.total_cmp(&b.residual));
        roots.truncate(MAX_ROOTS_PER_BRANCH);
    }
    roots.sort_by(|a, b| a.angle.total_cmp(&b.angle));
    roots.into_iter().map(|r| (r.phi, r.theta)).collect()
}

struct Root {
    phi: Azimuth,
    angle: f64,
    theta: f64,
    residual: f64,
}

fn consider_root(st: &SymThreeQubitCanonical, branch: Branch, phi: Azimuth, roots: &mut Vec<Root>) {
    let sc = phi.sin_cos();
    let Some(theta) = theta_at(st, sc, branch) else {
        return;
    };
    if !(THETA_MARGIN < theta && theta < PI - THETA_MARGIN) {
        return;
    }
    let (res, _) = residuals_at(st, sc, theta);
    let r = res.max_abs();
    if r > RESIDUAL_TOL {
        return;
    }
    let angle = phi.angle();
    let dup = roots.iter().any(|q| {
        let dp = (q.angle - angle).abs();
        dp.min(TAU - dp) < DEDUPE_TOL && (q.theta - theta).abs() < DEDUPE_TOL
    });
    if !dup {
        roots.push(Root { phi, angle, theta, residual: r });
    }
}

/// Every candidate, sorted by case then `φ`.
pub fn all_candidates(st: &SymThreeQubitCanonical) -> Vec<CandidateRecord> {
    let mut out = Vec::new();
    out.push(candidate_case1(st));
    if let Ok(c) = candidate_case21(st) {
        out.push(c);
    }
    for branch in [Branch::A, Branch::B] {
        for (phi, theta) in case2_roots(st, branch) {
            out.push(record(st, phi, theta, branch.case_tag()));
        }
    }
    out.sort_by(|a, b| a.case_tag.cmp(&b.case_tag).then(a.phi.total_cmp(&b.phi)));
    out
}

/// GM by candidate enumeration, with the oracle used as a guard on the
/// boundary of the parameter space.
pub fn gm_sym3q(st: &SymThreeQubitCanonical) -> GmResult {
    gm_sym3q_with(st, &OracleConfig::default())
}

pub fn gm_sym3q_with(st: &SymThreeQubitCanonical, cfg: &OracleConfig) -> GmResult {
    let candidates = all_candidates(st);
    let best = candidates
        .iter()
        .fold(&candidates[0], |b, c| if c.g_j_squared > b.g_j_squared { c } else { b });
    let mut g2 = best.g_j_squared;
    let mut party = BlochVector::from_angles(best.theta, best.phi);
    let mut overridden = false;

    if !st.is_generic(BOUNDARY_TOL) {
        let opt = symmetric_oracle_search(&st.to_dicke(), cfg);
        if opt.g_squared > g2 + OVERRIDE_TOL {
            g2 = opt.g_squared;
            party = BlochVector::from_angles(2.0 * opt.alpha, opt.theta);
            overridden = true;
        }
    }
    let mut result = GmResult::from_g_squared(g2, Method::Sym3q).with_closest_product(alloc::vec![party; 3]);
    result.candidates = candidates;
    result.flags.oracle_override = overridden;
    result
}

/// `max |r + Gs − λs|` with `r`, `G` taken from the reduced states of a
/// dense three-qubit state and `λ = s·(r + Gs)`.
pub fn bloch_stationarity_residual(psi: &PureState, phi: f64, theta: f64) -> Result<f64> {
    if psi.n_qubits() != 3 {
        return Err(GmError::param("stationarity check needs three qubits"));
    }
    let rho_ab = psi.reduced_pair(2)?;
    let rho_a: Mat2 = core::array::from_fn(|i| {
        core::array::from_fn(|j| rho_ab.0[2 * i][2 * j] + rho_ab.0[2 * i + 1][2 * j + 1])
    });
    let mut r = [0.0; 3];
    let mut gm = [[0.0; 3]; 3];
    for i in 0..3 {
        let p = crate::linalg::pauli(i + 1);
        r[i] = (0..2)
            .flat_map(|k| (0..2).map(move |l| (k, l)))
            .map(|(k, l)| (rho_a[k][l] * p[l][k]).re)
            .sum();
        for j in 0..3 {
            gm[i][j] = (rho_ab * Matrix4::pauli_pair(i + 1, j + 1)).trace().re;
        }
    }
    let s = crate::optimize::sphere_point(theta, phi);
    let v: [f64; 3] = core::array::from_fn(|i| r[i] + (0..3).map(|j| gm[i][j] * s[j]).sum::<f64>());
    let lambda: f64 = (0..3).map(|i| v[i] * s[i]).sum();
    Ok((0..3).map(|i| (v[i] - lambda * s[i]).abs()).fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::FRAC_PI_2;

    fn st(g: f64, t: f64, gamma: f64) -> SymThreeQubitCanonical {
        let h = (1.0 - g * g - 3.0 * t * t).max(0.0).sqrt();
        SymThreeQubitCanonical::new(g, t, h, gamma).unwrap()
    }

    #[test]
    fn case1_examples() {
        assert_eq!(candidate_case1(&st(1.0, 0.0, 0.0)).g_j_squared, 1.0);
        assert!((candidate_case1(&st(0.6, 0.3, 0.2)).g_j_squared - 0.36).abs() < 1e-15);
        assert_eq!(candidate_case1(&st(0.0, 1.0 / 3f64.sqrt(), 0.0)).g_j_squared, 0.0);
    }

    #[test]
    fn candidate_formula_at_pole_is_g_squared() {
        for (g, t, gamma) in [(0.3, 0.4, 0.5), (0.8, 0.1, -1.0), (0.1, 0.5, 1.5)] {
            let s = st(g, t, gamma);
            assert!((gm_candidate(&s, 1.234, 0.0) - g * g).abs() < 1e-15);
        }
    }

    #[test]
    fn case21_example() {
        let s = st(0.8, 0.2, 0.3);
        let rec = candidate_case21(&s).unwrap();
        let (g2, t2, h2) = (0.64, 0.04, s.h * s.h);
        let den = t2 - 2.0 * t2 * t2 + g2 - 6.0 * g2 * t2 - 2.0 * 0.8 * 0.2 * h2 * 0.6f64.cos();
        assert!((rec.g_j_squared - (g2 - (g2 - t2).powi(3) / den)).abs() < 1e-15);
        assert!((gm_candidate(&s, rec.phi, rec.theta) - rec.g_j_squared).abs() < 1e-10);
        assert!(rec.residual <= RESIDUAL_TOL);
        let ta = theta_from_phi(&s, rec.phi, Branch::A).unwrap();
        let tb = theta_from_phi(&s, rec.phi, Branch::B).unwrap();
        assert!((ta - tb).abs() < 1e-9);
    }

    #[test]
    fn case21_degenerate() {
        let t = 0.4;
        let s = st(t, t, 0.7);
        assert_eq!(candidate_case21(&s), Err(SkipReason::Degenerate));
    }

    #[test]
    fn theta_relations() {
        let s = st(0.5, 0.4, 0.4);
        let th = theta_from_phi(&s, 0.2, Branch::A).unwrap();
        let expect = 2.0 * (0.5 * 0.4f64.sin() / (s.h * 0.2f64.sin())).atan();
        assert!((th - expect).abs() < 1e-15);
        // sin(γ−φ) < 0 while sin 2φ > 0: no admissible θ.
        assert!(theta_from_phi(&s, 1.0, Branch::A).is_none());
        assert!(theta_from_phi(&s, 0.0, Branch::A).is_none());
        assert!(theta_from_phi(&s, FRAC_PI_2, Branch::B).is_none());
    }

    #[test]
    fn examples() {
        let w = gm_sym3q(&st(0.0, 1.0 / 3f64.sqrt(), 0.0));
        assert!((w.g_squared - 4.0 / 9.0).abs() < 1e-10);
        assert!((w.e_g - 5.0 / 9.0).abs() < 1e-10);
        let h = 0.5f64.sqrt();
        for gamma in [0.0, 0.4, -1.0, FRAC_PI_2] {
            let r = gm_sym3q(&SymThreeQubitCanonical::new(h, 0.0, h, gamma).unwrap());
            assert!((r.g_squared - 0.5).abs() < 1e-10, "gamma {gamma}");
        }
        assert_eq!(gm_sym3q(&st(1.0, 0.0, 0.0)).g_squared, 1.0);
    }

    #[test]
    fn closest_product_reproduces_value() {
        let s = st(0.5, 0.35, 0.8);
        let r = gm_sym3q(&s);
        let a = r.closest_product[0].to_ket();
        let prod = PureState::product(&[a, a, a]).unwrap();
        let ov = prod.inner(&s.to_dense()).norm_sqr();
        assert!((ov - r.g_squared).abs() < 1e-10, "{ov} vs {}", r.g_squared);
    }
}
