//! Subcommand handlers. Each returns the exit code for a successful run
//! (0, or 3 when a solver flagged its result).

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use gm_core::dicke::gm_dicke_nonneg;
use gm_core::oracle::{gm_symmetric_oracle, mixed_oracle_optimum};
use gm_core::rank2::{g_closed_form, g_numeric, rank2_to_matrix, X2_SNAP};
use gm_core::states::MAX_DENSE_QUBITS;
use gm_core::sym3q::gm_sym3q_with;
use gm_core::wmax::verify_w_uniqueness;
use gm_core::{
    BlochVector, GmError, GmResult, Method, OracleConfig, PureState, RankTwoCanonical, SymThreeQubitCanonical,
    SymmetricDickeState,
};
use serde::Serialize;

use crate::cli::{Command, DickeArgs, Fig2Args, FileArgs, OutArgs, PureArgs, Rank2Args, ScanArgs, Sym3Args};
use crate::error::{exit, CliError};
use crate::output::{render_crosscheck, render_text, sig, CrosscheckEntry, CrosscheckReport, Diagnostics, OutputRecord};
use crate::parallel;
use crate::schema::{read_state_file, State, StateFile};
use crate::tables::{fig1_rows, write_csv, GridRow};

/// Environment variable overriding the default oracle seed.
pub const SEED_ENV: &str = "GM_SEED";

/// Largest pairwise difference `crosscheck` accepts.
pub const CROSSCHECK_TOL: f64 = 1e-7;

/// Settings shared by all subcommands.
pub struct Context<'a> {
    pub json: bool,
    pub deg: bool,
    pub out: &'a mut dyn Write,
}

impl Context<'_> {
    fn angle(&self, x: f64) -> f64 {
        if self.deg {
            x.to_radians()
        } else {
            x
        }
    }

    fn print(&mut self, text: &str) -> Result<(), CliError> {
        self.out.write_all(text.as_bytes()).map_err(stdout_error)
    }

    fn print_json<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(value).expect("output records serialize");
        text.push('\n');
        self.print(&text)
    }

    fn emit(&mut self, record: &OutputRecord) -> Result<i32, CliError> {
        if self.json {
            self.print_json(record)?;
        } else {
            self.print(&render_text(record))?;
        }
        Ok(if record.result.flags.non_converged {
            exit::SOLVER_WARNING
        } else {
            exit::SUCCESS
        })
    }
}

fn stdout_error(source: std::io::Error) -> CliError {
    CliError::Write {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

/// `--seed` if given, else `$GM_SEED`, else the built-in default.
pub fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::invalid(format!("{SEED_ENV}={v:?} is not an unsigned 64-bit integer"))),
        Err(std::env::VarError::NotPresent) => Ok(OracleConfig::default().seed),
        Err(e) => Err(CliError::invalid(format!("{SEED_ENV}: {e}"))),
    }
}

fn oracle_config(seed: Option<u64>, restarts: Option<usize>) -> Result<OracleConfig, CliError> {
    let mut cfg = OracleConfig::with_seed(resolve_seed(seed)?);
    if let Some(r) = restarts {
        cfg.restarts = r;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn record(input: StateFile, result: GmResult, solver: &str, start: Instant) -> OutputRecord {
    OutputRecord {
        input_echo: input,
        solver_diagnostics: Diagnostics {
            solver: solver.to_string(),
            candidate_count: result.candidates.len(),
            oracle_stats: result.oracle_stats,
            notes: Vec::new(),
        },
        result,
        wall_time_ms: elapsed_ms(start),
    }
}

/// Rank-two results carry `g(ρ)` in `g_squared`: it is the `G²` of any
/// three-qubit purification whose two-qubit marginal is `ρ`.
fn rank2_result(g: f64, method: Method) -> GmResult {
    GmResult::from_g_squared(g, method)
}

fn has_axial_bloch(st: &RankTwoCanonical) -> bool {
    st.x[0].abs() <= X2_SNAP && st.x[1].abs() <= X2_SNAP
}

fn dense(state: &State) -> Result<Option<PureState>, CliError> {
    Ok(match state {
        State::Pure(p) => Some(p.clone()),
        State::Dicke(d) => Some(d.to_dense()?),
        State::Sym3q(s) => Some(s.to_dense()),
        State::Rank2(_) => None,
    })
}

fn write_file(path: &Path, f: impl FnOnce(&mut BufWriter<File>) -> Result<(), CliError>) -> Result<(), CliError> {
    let wrap = |source| CliError::Write {
        path: path.to_path_buf(),
        source,
    };
    let mut w = BufWriter::new(File::create(path).map_err(wrap)?);
    f(&mut w)?;
    w.flush().map_err(wrap)
}

pub fn execute(command: &Command, ctx: &mut Context) -> Result<i32, CliError> {
    match command {
        Command::Dicke(a) => dicke(a, ctx),
        Command::Sym3(a) => sym3(a, ctx),
        Command::Rank2(a) => rank2(a, ctx),
        Command::Pure(a) => pure(a, ctx),
        Command::Oracle(a) => oracle(a, ctx),
        Command::WmaxScan(a) => wmax_scan(a, ctx),
        Command::Fig1(a) => fig1(a, ctx),
        Command::Fig2(a) => fig2(a, ctx),
        Command::Crosscheck(a) => crosscheck(a, ctx),
    }
}

fn dicke(a: &DickeArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let start = Instant::now();
    let state = match (&a.source.file, &a.source.amps) {
        (Some(path), _) => match read_state_file(path)?.to_state()? {
            State::Dicke(d) => d,
            other => {
                return Err(CliError::invalid(format!(
                    "`gm dicke` needs a state of kind \"dicke\", got \"{}\"",
                    other.to_file().kind()
                )))
            }
        },
        (None, Some(amps)) => SymmetricDickeState::from_real(amps)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    if !state.is_non_negative() {
        return Err(GmError::Unsupported(
            "the Dicke solver needs non-negative real amplitudes; use `gm oracle` for this state".into(),
        )
        .into());
    }
    let result = gm_dicke_nonneg(&state)?;
    ctx.emit(&record(State::Dicke(state).to_file(), result, "dicke", start))
}

fn sym3(a: &Sym3Args, ctx: &mut Context) -> Result<i32, CliError> {
    let start = Instant::now();
    let gamma = ctx.angle(a.gamma);
    let st = if a.renorm {
        SymThreeQubitCanonical::renormalized(a.g, a.t, a.h, gamma)?
    } else {
        SymThreeQubitCanonical::new(a.g, a.t, a.h, gamma)?
    };
    let result = gm_sym3q_with(&st, &oracle_config(None, None)?);
    ctx.emit(&record(State::Sym3q(st).to_file(), result, "sym3q", start))
}

fn rank2(a: &Rank2Args, ctx: &mut Context) -> Result<i32, CliError> {
    let start = Instant::now();
    let x: [f64; 3] = a
        .x
        .as_slice()
        .try_into()
        .map_err(|_| CliError::invalid(format!("--x needs 3 components, got {}", a.x.len())))?;
    let st = RankTwoCanonical::new(ctx.angle(a.gamma1), ctx.angle(a.gamma2), x)?;
    let (result, solver) = if a.closed_form {
        if !has_axial_bloch(&st) {
            return Err(CliError::invalid("--closed-form requires x1 = x2 = 0"));
        }
        let g = g_closed_form(st.x[2], st.gamma1, st.gamma2);
        (rank2_result(g, Method::Rank2Closed), "rank2-closed")
    } else {
        (rank2_result(g_numeric(&st), Method::Rank2Numeric), "rank2-numeric")
    };
    ctx.emit(&record(State::Rank2(st).to_file(), result, solver, start))
}

fn pure(a: &PureArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let start = Instant::now();
    let cfg = oracle_config(a.seed, a.restarts)?;
    let state = read_state_file(&a.file)?.to_state()?;
    let psi = dense(&state)?.ok_or_else(|| CliError::invalid("`gm pure` needs a pure state; use `gm oracle` for rank2"))?;
    let result = parallel::pure_oracle(&psi, &cfg)?;
    ctx.emit(&record(state.to_file(), result, "pure-oracle", start))
}

fn oracle(a: &FileArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let start = Instant::now();
    let cfg = oracle_config(None, None)?;
    let state = read_state_file(&a.file)?.to_state()?;
    let (result, solver) = match &state {
        State::Rank2(st) => {
            let opt = mixed_oracle_optimum(&rank2_to_matrix(st), &cfg)?;
            let result = rank2_result(opt.g, Method::Oracle)
                .with_closest_product(vec![BlochVector { s: opt.s1 }, BlochVector { s: opt.s2 }]);
            (result, "mixed-oracle")
        }
        _ => {
            let psi = dense(&state)?.expect("pure-representable state");
            (parallel::pure_oracle(&psi, &cfg)?, "pure-oracle")
        }
    };
    ctx.emit(&record(state.to_file(), result, solver, start))
}

#[derive(Serialize)]
struct ScanSummary<'a> {
    min_g: f64,
    argmin: (f64, f64, f64),
    margin: f64,
    grid_spec: &'a str,
    w_uniqueness_certified: bool,
    report: PathBuf,
    grid: PathBuf,
    wall_time_ms: f64,
}

fn wmax_scan(a: &ScanArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let start = Instant::now();
    let report = parallel::scan_global_min(a.resolution)?;
    fs::create_dir_all(&a.out).map_err(|source| CliError::Write {
        path: a.out.clone(),
        source,
    })?;
    let report_path = a.out.join("report.json");
    let grid_path = a.out.join("grid.csv");
    write_file(&report_path, |w| {
        serde_json::to_writer_pretty(&mut *w, &report).map_err(|e| CliError::Write {
            path: report_path.clone(),
            source: e.into(),
        })?;
        w.write_all(b"\n").map_err(|source| CliError::Write {
            path: report_path.clone(),
            source,
        })
    })?;
    let rows: Vec<GridRow> = report.cells.iter().map(GridRow::from).collect();
    write_file(&grid_path, |w| write_csv(w, &rows))?;

    let summary = ScanSummary {
        min_g: report.min_g,
        argmin: report.argmin,
        margin: report.margin,
        grid_spec: &report.grid_spec,
        w_uniqueness_certified: verify_w_uniqueness(),
        report: report_path,
        grid: grid_path,
        wall_time_ms: elapsed_ms(start),
    };
    if ctx.json {
        ctx.print_json(&summary)?;
    } else {
        let (g1, g2, x3) = summary.argmin;
        let text = format!(
            "min g = {}\nmax E_G = {}\nargmin: gamma1 = {}, gamma2 = {}, x3 = {}\nmargin: {}\ngrid: {}\n\
             W uniqueness certificate: {}\nwrote {} and {}\ntime: {} ms\n",
            sig(summary.min_g),
            sig(1.0 - summary.min_g),
            sig(g1),
            sig(g2),
            sig(x3),
            sig(summary.margin),
            summary.grid_spec,
            if summary.w_uniqueness_certified { "passed" } else { "FAILED" },
            summary.report.display(),
            summary.grid.display(),
            sig(summary.wall_time_ms),
        );
        ctx.print(&text)?;
    }
    Ok(exit::SUCCESS)
}

fn report_written(ctx: &mut Context, path: &Path, rows: usize) -> Result<i32, CliError> {
    if ctx.json {
        ctx.print_json(&serde_json::json!({ "out": path, "rows": rows }))?;
    } else {
        ctx.print(&format!("wrote {rows} rows to {}\n", path.display()))?;
    }
    Ok(exit::SUCCESS)
}

fn fig1(a: &OutArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let rows = fig1_rows();
    write_file(&a.out, |w| write_csv(w, &rows))?;
    report_written(ctx, &a.out, rows.len())
}

fn fig2(a: &Fig2Args, ctx: &mut Context) -> Result<i32, CliError> {
    let report = parallel::scan_global_min(a.resolution)?;
    let rows: Vec<GridRow> = report.cells.iter().map(GridRow::from).collect();
    write_file(&a.out, |w| write_csv(w, &rows))?;
    report_written(ctx, &a.out, rows.len())
}

fn crosscheck(a: &FileArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let start = Instant::now();
    let cfg = oracle_config(None, None)?;
    let state = read_state_file(&a.file)?.to_state()?;
    let mut entries = Vec::new();
    let mut non_converged = false;
    let mut push = |solver: &str, r: &GmResult| {
        non_converged |= r.flags.non_converged;
        entries.push(CrosscheckEntry {
            solver: solver.to_string(),
            value: r.g_squared,
        });
    };

    let symmetric = match &state {
        State::Dicke(d) => Some(d.clone()),
        State::Sym3q(s) => Some(s.to_dicke()),
        _ => None,
    };
    if let State::Sym3q(s) = &state {
        push("sym3q", &gm_sym3q_with(s, &cfg));
    }
    if let Some(d) = &symmetric {
        if d.is_non_negative() {
            push("dicke", &gm_dicke_nonneg(d)?);
        }
        push("symmetric-oracle", &gm_symmetric_oracle(d, &cfg));
    }
    match &state {
        State::Rank2(st) => {
            if has_axial_bloch(st) {
                push(
                    "rank2-closed",
                    &rank2_result(g_closed_form(st.x[2], st.gamma1, st.gamma2), Method::Rank2Closed),
                );
            }
            push("rank2-numeric", &rank2_result(g_numeric(st), Method::Rank2Numeric));
            let opt = mixed_oracle_optimum(&rank2_to_matrix(st), &cfg)?;
            push("mixed-oracle", &rank2_result(opt.g, Method::Oracle));
        }
        State::Dicke(d) if d.n_qubits() > MAX_DENSE_QUBITS => {}
        _ => {
            let psi = dense(&state)?.expect("pure-representable state");
            push("pure-oracle", &parallel::pure_oracle(&psi, &cfg)?);
        }
    }

    let max = entries.iter().map(|e| e.value).fold(f64::NEG_INFINITY, f64::max);
    let min = entries.iter().map(|e| e.value).fold(f64::INFINITY, f64::min);
    let max_delta = if entries.len() > 1 { max - min } else { 0.0 };
    let report = CrosscheckReport {
        input_echo: state.to_file(),
        entries,
        max_delta,
        tolerance: CROSSCHECK_TOL,
        agree: max_delta <= CROSSCHECK_TOL,
        wall_time_ms: elapsed_ms(start),
    };
    if ctx.json {
        ctx.print_json(&report)?;
    } else {
        ctx.print(&render_crosscheck(&report))?;
        if non_converged {
            ctx.print("warning: an oracle run did not converge\n")?;
        }
    }
    Ok(if report.agree && !non_converged {
        exit::SUCCESS
    } else {
        exit::SOLVER_WARNING
    })
}
