//! Parallel drivers for the core solvers. Work is split into units whose
//! results do not depend on scheduling (restarts with their own seed stream,
//! scan rows), and reduced in index order, so output is identical for any
//! thread count.

use gm_core::oracle::{pure_oracle_restart, reduce_restarts, OracleConfig, RestartOutcome};
use gm_core::wmax::{assemble_report, scan_row, GlobalMinReport};
use gm_core::{GmResult, PureState};
use rayon::prelude::*;

pub fn pure_oracle(psi: &PureState, cfg: &OracleConfig) -> gm_core::Result<GmResult> {
    cfg.validate()?;
    let outcomes: Vec<RestartOutcome> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| pure_oracle_restart(psi, cfg, r))
        .collect();
    Ok(reduce_restarts(&outcomes).expect("at least one restart"))
}

pub fn scan_global_min(resolution: usize) -> gm_core::Result<GlobalMinReport> {
    if resolution < gm_core::wmax::MIN_RESOLUTION {
        // Let the core produce the error message.
        return gm_core::wmax::scan_global_min(resolution);
    }
    let rows = (0..resolution).into_par_iter().map(|j| scan_row(resolution, j)).collect();
    assemble_report(resolution, rows)
}
