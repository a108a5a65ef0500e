//! The W state as the GM-maximal three-qubit state.
//!
//! Every three-qubit pure state has two-qubit reductions of rank at most
//! two, so minimizing `G²` over pure states means minimizing the rank-two
//! `g` over subspaces `(γ₁, γ₂)` and Bloch vectors. This module holds the
//! closed form restricted to the two boundary families of subspaces, a
//! grid scan of the per-subspace minimum, and a finite certificate that the
//! minimum at `(π/4, π/4, x₃ = −1/3)` does not extend off the `x₃` axis.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{GmError, Result};
use crate::math::{Float, FRAC_PI_2, FRAC_PI_4, SQRT_2};
use crate::optimize::golden_section_min;
use crate::rank2::{f_objective, g_closed_form, g_numeric, region_thresholds};
use crate::states::{BlochVector, RankTwoCanonical};

const ANGLE_SLACK: f64 = 1e-12;

fn check_x3(x3: f64) -> Result<()> {
    if !(x3.abs() <= 1.0 + ANGLE_SLACK) {
        return Err(GmError::param("x3 must lie in [-1, 1]"));
    }
    Ok(())
}

fn x3_threshold_symmetric(gamma1: f64) -> f64 {
    let s = SQRT_2 * (2.0 * gamma1 + FRAC_PI_4).sin();
    (1.0 - s) / (3.0 + s)
}

/// Closed form on the subspaces with `γ₁ + γ₂ = π/2`.
pub fn g_symmetric_subspace(x3: f64, gamma1: f64) -> Result<f64> {
    if !(FRAC_PI_4 - ANGLE_SLACK..=FRAC_PI_2 + ANGLE_SLACK).contains(&gamma1) {
        return Err(GmError::param("gamma1 must lie in [pi/4, pi/2]"));
    }
    check_x3(x3)?;
    let c2 = (2.0 * gamma1).cos();
    Ok(if x3 < x3_threshold_symmetric(gamma1) {
        0.5 - (1.0 + x3) * x3 * gamma1.cos().powi(2) / (-1.0 + 3.0 * x3 + (1.0 + x3) * c2)
    } else {
        (1.0 + x3) * (1.0 + (2.0 * gamma1).sin()) / 4.0
    })
}

/// Minimizing `x₃` on the subspace `(γ₁, π/2 − γ₁)`.
pub fn x3_star_symmetric(gamma1: f64) -> f64 {
    let s = gamma1.sin();
    2.0 * s * (s - SQRT_2) / (3.0 + (2.0 * gamma1).cos())
}

/// The quadratic whose admissible root is [`x3_star_symmetric`].
pub fn x3_star_quadratic(x3: f64, gamma1: f64) -> f64 {
    let c = (2.0 * gamma1).cos();
    (3.0 + c) * x3 * x3 + (-2.0 + 2.0 * c) * x3 + c - 1.0
}

/// Minimum of `g` over `x₃` on the subspace `(γ₁, π/2 − γ₁)`.
pub fn g_min_symmetric(gamma1: f64) -> f64 {
    let c = (2.0 * gamma1).cos();
    let num = 1.0 + c + SQRT_2 * gamma1.sin();
    num * num / ((3.0 + c) * (3.0 + c))
}

/// Closed form on the subspaces with `γ₁ = γ₂`.
pub fn g_equal_gamma(x3: f64, gamma1: f64) -> Result<f64> {
    if !(-ANGLE_SLACK..=FRAC_PI_4 + ANGLE_SLACK).contains(&gamma1) {
        return Err(GmError::param("gamma1 must lie in [0, pi/4]"));
    }
    check_x3(x3)?;
    let tan2 = gamma1.tan().powi(2);
    Ok(if x3 <= -tan2 {
        (1.0 - x3) / 2.0 * gamma1.cos().powi(2)
    } else if x3 < 0.0 {
        let s2 = (2.0 * gamma1).sin().powi(2);
        -(1.0 - x3).powi(2) * (1.0 + x3) * s2
            / (-1.0 + x3 * (2.0 + 7.0 * x3) + (1.0 - x3).powi(2) * (4.0 * gamma1).cos())
    } else {
        (1.0 + x3) / 2.0
    })
}

/// Minimum of the closed form over `x₃` in one subspace.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ScanCell {
    pub gamma1: f64,
    pub gamma2: f64,
    pub x3: f64,
    pub g: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct GlobalMinReport {
    pub min_g: f64,
    /// `(γ₁, γ₂, x₃)` of the smallest cell.
    pub argmin: (f64, f64, f64),
    pub grid_spec: String,
    /// Gap between the smallest cell and the smallest cell at a different
    /// `(γ₁, γ₂)`.
    pub margin: f64,
    /// All cells, row by row in `γ₂`.
    pub cells: Vec<ScanCell>,
}

/// Golden-section tolerance in `x₃`.
pub const SCAN_X3_TOL: f64 = 1e-10;
pub const MIN_RESOLUTION: usize = 32;

/// Angles of cell `(i, j)`: `γ₂ = j/(n−1)·π/4`, and `γ₁` runs from `γ₂` to
/// `π/2 − γ₂`, so the grid covers the canonical triangle including its apex
/// `(π/4, π/4)` and the edge `γ₂ = 0`.
pub fn scan_angles(resolution: usize, i: usize, j: usize) -> (f64, f64) {
    let n1 = (resolution - 1) as f64;
    let gamma2 = j as f64 / n1 * FRAC_PI_4;
    let gamma1 = gamma2 + i as f64 / n1 * (FRAC_PI_2 - 2.0 * gamma2);
    (gamma1, gamma2)
}

/// Minimizes over `x₃` between the region thresholds.
pub fn subspace_minimum(gamma1: f64, gamma2: f64) -> ScanCell {
    let (lo, hi) = region_thresholds(gamma1, gamma2);
    let f = |x| g_closed_form(x, gamma1, gamma2);
    let (mut x3, mut g) = golden_section_min(f, lo, hi, SCAN_X3_TOL);
    // Where g is flat in x₃ the minimizer is not unique; report x₃ = 0 if it
    // is among them.
    if lo <= 0.0 && 0.0 <= hi {
        let g0 = f(0.0);
        if g0 <= g + 4.0 * f64::EPSILON * g.abs() {
            (x3, g) = (0.0, g0.min(g));
        }
    }
    ScanCell { gamma1, gamma2, x3, g }
}

/// Row `j` (fixed `γ₂`) of the scan; rows are independent.
pub fn scan_row(resolution: usize, j: usize) -> Vec<ScanCell> {
    (0..resolution)
        .map(|i| {
            let (g1, g2) = scan_angles(resolution, i, j);
            subspace_minimum(g1, g2)
        })
        .collect()
}

fn check_resolution(resolution: usize) -> Result<()> {
    if resolution < MIN_RESOLUTION {
        return Err(GmError::param(format!(
            "resolution must be at least {MIN_RESOLUTION}, got {resolution}"
        )));
    }
    Ok(())
}

/// Builds the report from rows produced by [`scan_row`] in order of `j`.
pub fn assemble_report(resolution: usize, rows: Vec<Vec<ScanCell>>) -> Result<GlobalMinReport> {
    check_resolution(resolution)?;
    let cells: Vec<ScanCell> = rows.into_iter().flatten().collect();
    let mut best = cells[0];
    for c in &cells[1..] {
        let better = c.g < best.g
            || (c.g == best.g && (c.gamma1, c.gamma2) < (best.gamma1, best.gamma2));
        if better {
            best = *c;
        }
    }
    let same = |c: &ScanCell| c.gamma1 == best.gamma1 && c.gamma2 == best.gamma2;
    let second = cells
        .iter()
        .filter(|c| !same(c))
        .map(|c| c.g)
        .fold(f64::INFINITY, f64::min);
    Ok(GlobalMinReport {
        min_g: best.g,
        argmin: (best.gamma1, best.gamma2, best.x3),
        grid_spec: format!(
            "{resolution}x{resolution}: gamma2 = j/{n}*pi/4, gamma1 = gamma2 + i/{n}*(pi/2 - 2*gamma2); \
             x3 by golden section on [x3_lo, x3_hi] to {SCAN_X3_TOL:e}",
            n = resolution - 1
        ),
        margin: second - best.g,
        cells,
    })
}

/// Per-subspace minimum of `g` over the canonical angle triangle.
pub fn scan_global_min(resolution: usize) -> Result<GlobalMinReport> {
    check_resolution(resolution)?;
    let rows = (0..resolution).map(|j| scan_row(resolution, j)).collect();
    assemble_report(resolution, rows)
}

/// `f(2√2/3, 0, 1/3)` at `γ₁ = γ₂ = π/4`, `x = (x₁, 0, −1/3)`, in the
/// simplified form `(2/9)[5 + 3x₁ + √(9 + 3x₁(10 + 9x₁))]`.
pub fn w_direction_f(x1: f64) -> f64 {
    2.0 / 9.0 * (5.0 + 3.0 * x1 + (9.0 + 3.0 * x1 * (10.0 + 9.0 * x1)).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct UniquenessSample {
    pub x1: f64,
    /// `g` at `(π/4, π/4, (x₁, 0, −1/3))`.
    pub g: f64,
    /// `¼ f(2√2/3, 0, 1/3)`, a lower bound on `g`.
    pub bound: f64,
    /// `f` from the general expression at the same point, checking the bound.
    pub f_direct: f64,
    /// Largest `|g(rotated x) − g|` over the sampled rotations about `x₃`.
    pub rotation_defect: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct UniquenessCertificate {
    pub samples: Vec<UniquenessSample>,
    /// The simplified bound at `x₁ = 1`.
    pub bound_at_unit_x1: f64,
    pub passed: bool,
}

pub const W_G: f64 = 4.0 / 9.0;

/// Values of `x₁` checked off the axis. `x₁` stays within the Bloch ball
/// (`x₁² + 1/9 ≤ 1`), so the last sample is `√8/3` rather than 1.
pub fn uniqueness_x1_samples() -> Vec<f64> {
    let mut xs = alloc::vec![0.01, 0.05];
    xs.extend((1..=9).map(|k| k as f64 / 10.0));
    xs.push(8f64.sqrt() / 3.0);
    xs
}

const ROTATIONS: [f64; 2] = [FRAC_PI_4, 2.0];

pub fn w_uniqueness_certificate() -> UniquenessCertificate {
    let x3 = -1.0 / 3.0;
    let s1 = BlochVector {
        s: [8f64.sqrt() / 3.0, 0.0, 1.0 / 3.0],
    };
    let samples: Vec<UniquenessSample> = uniqueness_x1_samples()
        .into_iter()
        .map(|x1| {
            let st = RankTwoCanonical {
                gamma1: FRAC_PI_4,
                gamma2: FRAC_PI_4,
                x: [x1, 0.0, x3],
            };
            let g = g_numeric(&st);
            let rotation_defect = ROTATIONS
                .iter()
                .map(|&a| {
                    let rot = RankTwoCanonical {
                        x: [x1 * a.cos(), x1 * a.sin(), x3],
                        ..st
                    };
                    (g_numeric(&rot) - g).abs()
                })
                .fold(0.0, f64::max);
            UniquenessSample {
                x1,
                g,
                bound: 0.25 * w_direction_f(x1),
                f_direct: f_objective(&st, &s1),
                rotation_defect,
            }
        })
        .collect();
    let bound_at_unit_x1 = 0.25 * w_direction_f(1.0);
    let passed = bound_at_unit_x1 > W_G
        && samples.iter().all(|s| {
            s.bound > W_G
                && s.g - W_G >= s.bound - W_G - 1e-9
                && (s.f_direct - 4.0 * s.bound).abs() <= 1e-12
                && s.rotation_defect <= 1e-8
        });
    UniquenessCertificate {
        samples,
        bound_at_unit_x1,
        passed,
    }
}

/// Whether [`w_uniqueness_certificate`] passes.
pub fn verify_w_uniqueness() -> bool {
    w_uniqueness_certificate().passed
}
