//! Command-line front end for `gm-core`: JSON state files, text and JSON
//! reports, plot CSVs, and thread-parallel drivers for the brute-force
//! solvers.

pub mod cli;
pub mod commands;
pub mod error;
pub mod output;
pub mod parallel;
pub mod schema;
pub mod tables;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::Parser;

use crate::cli::Cli;
use crate::commands::{execute, Context};
use crate::error::{exit, CliError};

/// Runs the CLI on `args` (program name first) against the process's
/// standard streams and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    exit::SUCCESS
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    exit::USAGE
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let threads = match cli.threads {
        Some(0) => return Err(CliError::invalid("--threads must be at least 1")),
        Some(n) => n,
        None => 0,
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    // Output is buffered so the handlers can run inside the pool.
    let mut buf = Vec::new();
    let result = pool.install(|| {
        let mut ctx = Context {
            json: cli.json,
            deg: cli.deg,
            out: &mut buf,
        };
        execute(&cli.command, &mut ctx)
    });
    out.write_all(&buf)
        .and_then(|()| out.flush())
        .map_err(|source| CliError::Write {
            path: "<stdout>".into(),
            source,
        })?;
    let code = result?;
    Ok(code)
}
