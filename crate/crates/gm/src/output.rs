//! Result records and their text and JSON renderings.

use std::fmt::Write as _;

use gm_core::{GmResult, OracleStats};
use serde::{Deserialize, Serialize};

use crate::schema::StateFile;

/// Significant digits in text output.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub input_echo: StateFile,
    pub result: GmResult,
    pub wall_time_ms: f64,
    pub solver_diagnostics: Diagnostics,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Solver that produced the result.
    pub solver: String,
    /// Length of the candidate trail in `result.candidates`.
    pub candidate_count: usize,
    #[serde(default)]
    pub oracle_stats: Option<OracleStats>,
    #[serde(default)]
    pub notes: Vec<String>,
}

/// One solver's value in a cross-check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrosscheckEntry {
    pub solver: String,
    /// `G²` for pure states, `g(ρ)` for rank-two states.
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub input_echo: StateFile,
    pub entries: Vec<CrosscheckEntry>,
    /// Largest pairwise difference between entries.
    pub max_delta: f64,
    pub tolerance: f64,
    pub agree: bool,
    pub wall_time_ms: f64,
}

/// `x` with [`SIGNIFICANT_DIGITS`] significant digits: fixed notation for
/// moderate magnitudes, scientific otherwise.
pub fn sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        // Rounding can carry into a new leading digit (9.99… → 10.0…).
        if s.trim_start_matches('-').split('.').next().map_or(0, |d| d.trim_start_matches('0').len())
            > (exp + 1).max(0) as usize
        {
            return format!("{x:.prec$}", prec = decimals.saturating_sub(1));
        }
        s
    } else {
        format!("{x:.prec$e}", prec = SIGNIFICANT_DIGITS - 1)
    }
}

/// Text rendering of a record. Rank-two inputs report `g(ρ)`; everything
/// else reports `G²`, `G` and `E_G`.
pub fn render_text(record: &OutputRecord) -> String {
    let r = &record.result;
    let mut out = String::new();
    let method = serde_json::to_value(r.method).ok().and_then(|v| v.as_str().map(String::from));
    let _ = writeln!(out, "method: {}", method.unwrap_or_default());
    if matches!(record.input_echo, StateFile::Rank2 { .. }) {
        let _ = writeln!(out, "g = {}", sig(r.g_squared));
    } else {
        let _ = writeln!(out, "G^2 = {}", sig(r.g_squared));
        let _ = writeln!(out, "G = {}", sig(r.g));
        let _ = writeln!(out, "E_G = {}", sig(r.e_g));
    }
    for (k, b) in r.closest_product.iter().enumerate() {
        let _ = writeln!(out, "party {k}: s = ({}, {}, {})", sig(b.s[0]), sig(b.s[1]), sig(b.s[2]));
    }
    let d = &record.solver_diagnostics;
    if d.candidate_count > 0 {
        let _ = writeln!(out, "candidates: {}", d.candidate_count);
    }
    if let Some(s) = &d.oracle_stats {
        let _ = writeln!(
            out,
            "restarts: {} ({} converged, best #{}, {} sweeps)",
            s.restarts, s.converged_restarts, s.best_restart, s.total_sweeps
        );
    }
    if r.flags.oracle_override {
        let _ = writeln!(out, "note: boundary regime, value taken from the symmetric oracle");
    }
    if r.flags.non_converged {
        let _ = writeln!(out, "warning: no restart converged");
    }
    for note in &d.notes {
        let _ = writeln!(out, "note: {note}");
    }
    let _ = writeln!(out, "time: {} ms", sig(record.wall_time_ms));
    out
}

pub fn render_crosscheck(report: &CrosscheckReport) -> String {
    let mut out = String::new();
    let width = report.entries.iter().map(|e| e.solver.len()).max().unwrap_or(0);
    for e in &report.entries {
        let _ = writeln!(out, "{:width$}  {}", e.solver, sig(e.value));
    }
    let _ = writeln!(
        out,
        "max delta: {} ({} tolerance {})",
        sig(report.max_delta),
        if report.agree { "within" } else { "EXCEEDS" },
        sig(report.tolerance)
    );
    out
}
