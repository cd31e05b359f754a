use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kt_hodge::exactmath::{parse_rational, Rational};

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "kt-hodge", version, about = "Hodge numbers of J_{a,b} on the Kodaira-Thurston manifold")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Structure and metric parameters. Rationals are `p/q` or integers.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// d = b/(8π), nonzero.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub d: Rational,

    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "0")]
    pub a: Rational,

    /// Use the almost Kähler metric with this ρ > 0 instead of the standard one.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub rho: Option<Rational>,
}

#[derive(Debug, Clone, Args)]
pub struct WindowArgs {
    #[arg(long, default_value_t = 3)]
    pub k_max: u32,

    #[arg(long, default_value_t = 3)]
    pub m_max: u32,

    #[arg(long, default_value_t = 3)]
    pub n_max: u32,

    /// Bound on |l| for finite sectors; defaults to covering 0..=2d.
    #[arg(long)]
    pub window: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full Hodge diamond.
    Diamond {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// h^{0,1} with its lattice witnesses.
    H01 {
        #[command(flatten)]
        params: ParamArgs,
        /// Cross-check against brute-force counting.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Closed form against brute force for every d = p/q in the grid.
    Sweep {
        #[arg(long, default_value_t = 50)]
        p_max: u64,
        #[arg(long, default_value_t = 5)]
        q_max: u64,
    },
    /// Find d whose h^{0,1} equals the target.
    Search {
        #[arg(long)]
        target: u64,
    },
    /// Randomized algebraic-vs-shooting agreement for v' = (Ax + B)v.
    VerifyStokes {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Angle below which the shot lines count as equal.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Per-sector report.
    Sectors {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        window: WindowArgs,
    },
}
