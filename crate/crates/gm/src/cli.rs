use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "gm",
    version,
    about = "Geometric measure of entanglement for pure multiqubit states",
    allow_negative_numbers = true
)]
pub struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for the parallel solvers [default: all cores].
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    /// Read angle arguments (--gamma, --gamma1, --gamma2) in degrees.
    #[arg(long, global = true)]
    pub deg: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Symmetric state with non-negative Dicke amplitudes.
    Dicke(DickeArgs),
    /// Symmetric three-qubit state in canonical form.
    Sym3(Sym3Args),
    /// g(ρ) of a two-qubit rank-two canonical state.
    Rank2(Rank2Args),
    /// Brute-force GM of a pure state file.
    Pure(PureArgs),
    /// Brute-force reference value for any state file.
    Oracle(FileArgs),
    /// Global minimum of g over the rank-two subspaces, plus its grid.
    WmaxScan(ScanArgs),
    /// g(x₃) curves for four rank-two subspaces, as CSV.
    Fig1(OutArgs),
    /// Per-subspace minimum of g over the canonical triangle, as CSV.
    Fig2(Fig2Args),
    /// Run every applicable solver on a state file and compare.
    Crosscheck(FileArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct DickeSource {
    /// State file of kind "dicke".
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Real amplitudes a_0,…,a_N.
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
    pub amps: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
pub struct DickeArgs {
    #[command(flatten)]
    pub source: DickeSource,
}

#[derive(Debug, Args)]
pub struct Sym3Args {
    #[arg(long)]
    pub g: f64,
    #[arg(long)]
    pub t: f64,
    #[arg(long)]
    pub h: f64,
    /// Relative phase of the |111⟩ term.
    #[arg(long)]
    pub gamma: f64,
    /// Rescale (g, t, h) onto g² + 3t² + h² = 1 instead of rejecting them.
    #[arg(long)]
    pub renorm: bool,
}

#[derive(Debug, Args)]
pub struct Rank2Args {
    #[arg(long)]
    pub gamma1: f64,
    #[arg(long)]
    pub gamma2: f64,
    /// Bloch vector x1,x2,x3.
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true, required = true)]
    pub x: Vec<f64>,
    /// Use the closed form (requires x1 = x2 = 0).
    #[arg(long)]
    pub closed_form: bool,
}

#[derive(Debug, Args)]
pub struct PureArgs {
    #[arg(long)]
    pub file: PathBuf,
    /// Random restarts [default: 32].
    #[arg(long)]
    pub restarts: Option<usize>,
    /// Seed of the restart generator [default: $GM_SEED, else built in].
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct FileArgs {
    #[arg(long)]
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Grid points along each angle.
    #[arg(long, default_value_t = 64)]
    pub resolution: usize,
    /// Directory for report.json and grid.csv.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct Fig2Args {
    #[arg(long)]
    pub out: PathBuf,
    /// Grid points along each angle.
    #[arg(long, default_value_t = 64)]
    pub resolution: usize,
}
