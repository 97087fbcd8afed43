//! `klcells`: exact Kazhdan–Lusztig cells and the ordinary/exceptional
//! classification of finite Coxeter groups from the command line.
//!
//! Reports go to stdout, notices to stderr. Exit codes: 0 success, 1 some
//! claim failed, 2 usage error or resource refusal, 3 internal failure.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "klcells",
    version,
    about = "Kazhdan-Lusztig cells and exceptional representations of finite Coxeter groups"
)]
pub struct Cli {
    /// Coxeter type: A3, B3, D4, I2(7), H3, H4, F4, ...
    #[arg(long = "type", global = true, value_name = "TYPE")]
    pub ty: Option<String>,

    /// Cache root; each group uses <cache>/<type>/.
    #[arg(long, global = true, env = "KLCELLS_CACHE_DIR", value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,

    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Largest group order to enumerate.
    #[arg(long, global = true, value_name = "N")]
    pub max_order: Option<usize>,

    /// Allow the full pipeline on groups above the desk-scale limit, and add
    /// F4 and H4 to the default verification set.
    #[arg(long, global = true)]
    pub heavy: bool,

    /// Comma-separated claims to verify (1.2b, 1.3a, 1.3c, 1.5a, 1.6b) or `all`.
    #[arg(long, global = true, default_value = "all")]
    pub claims: String,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, degrees, conjugacy classes and longest element.
    Group,
    /// Left, right and two-sided cells with a-values and distinguished involutions.
    Cells,
    /// Exact character table.
    Chartable,
    /// Ordinary/exceptional classification of irreducibles and involutions.
    Classify,
    /// Check the claims; without --type, runs the default group set.
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("klcells: {e}");
            ExitCode::from(match e {
                klcells::Error::Usage(_) | klcells::Error::Refused(_) => 2,
                _ => 3,
            })
        }
    }
}
