//! Command-line driver for `chiral-core`.
//!
//! Every subcommand renders a table (CSV by default, JSON on request) to
//! standard output or to `--out`. Randomness comes from ChaCha20 seeded with
//! `--seed`; without a seed one is drawn from the operating system and
//! reported on standard error.

pub mod commands;
pub mod error;
pub mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use error::{CliError, Result};
use output::Format;

#[derive(Debug, Parser)]
#[command(name = "chiral", version, about = "Chirality of triangles from their side lengths")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write the table here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Seed for the ChaCha20 generator. Drawn from the OS when omitted.
    #[arg(long, global = true, value_name = "U64")]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate and classify one side triple.
    #[command(allow_negative_numbers = true)]
    Chi(ChiArgs),
    /// Sample the measure over the simplex of normalized sides.
    PhaseGrid(PhaseGridArgs),
    /// Distribution of |chi| for equilateral triangles with Gaussian side errors.
    Simulate(SimulateArgs),
    /// 75% confidence thresholds for a list of relative errors.
    Table1(Table1Args),
    /// Decide whether a measured triple is chiral beyond its error level.
    #[command(allow_negative_numbers = true)]
    Classify(ClassifyArgs),
    /// Largest chirality of a triangle, analytic and by grid search.
    ChiMax(ChiMaxArgs),
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Relative tolerance for side equality and degeneracy.
    #[arg(long, default_value_t = 0.0)]
    pub rel_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainArg {
    /// Whole simplex, non-triangles included.
    Full,
    /// Only normalized triples satisfying the triangle inequality.
    Triangle,
}

impl From<DomainArg> for chiral_core::Domain {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Full => chiral_core::Domain::FullSimplex,
            DomainArg::Triangle => chiral_core::Domain::TriangleRegion,
        }
    }
}

#[derive(Debug, Args)]
pub struct PhaseGridArgs {
    /// Lattice points per simplex edge.
    #[arg(long, default_value_t = 201)]
    pub resolution: usize,
    #[arg(long, value_enum, default_value_t = DomainArg::Full)]
    pub domain: DomainArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    /// Evaluate draws with non-positive sides as they are.
    Keep,
    /// Redraw any triple with a non-positive side.
    Redraw,
}

impl From<PolicyArg> for chiral_core::NegativeSidePolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Keep => chiral_core::NegativeSidePolicy::Keep,
            PolicyArg::Redraw => chiral_core::NegativeSidePolicy::Redraw,
        }
    }
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Side length of the unperturbed equilateral triangle.
    #[arg(long, default_value_t = chiral_core::montecarlo::DEFAULT_BASE_SIDE)]
    pub base: f64,
    /// Standard deviation of each side relative to the base side.
    #[arg(long)]
    pub rel_sigma: f64,
    /// Number of samples.
    #[arg(long, default_value_t = chiral_core::montecarlo::DEFAULT_SAMPLES)]
    pub n: usize,
    /// Handling of draws with a non-positive side.
    #[arg(long, value_enum, default_value_t = PolicyArg::Keep)]
    pub negative_sides: PolicyArg,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    /// Samples per row.
    #[arg(long, default_value_t = chiral_core::montecarlo::DEFAULT_SAMPLES)]
    pub n: usize,
    /// Comma-separated relative errors; defaults to 0.01 through 0.40.
    #[arg(long, value_delimiter = ',')]
    pub errors: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value_t = PolicyArg::Keep)]
    pub negative_sides: PolicyArg,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Relative measurement error of each side.
    #[arg(long)]
    pub rel_error: f64,
    /// Samples for the threshold simulation.
    #[arg(long, default_value_t = chiral_core::montecarlo::DEFAULT_SAMPLES)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct ChiMaxArgs {
    /// Lattice steps per edge for the grid search.
    #[arg(long, default_value_t = 1000)]
    pub resolution: usize,
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<()> {
    let dest = output::Destination::from_option(cli.out.as_deref());
    let seed = || {
        cli.seed.unwrap_or_else(|| {
            let s = rand::random::<u64>();
            eprintln!("seed: {s}");
            s
        })
    };
    let report = match &cli.command {
        Command::Chi(args) => commands::chi(args, cli.format)?,
        Command::PhaseGrid(args) => commands::phase_grid(args, cli.format)?,
        Command::Simulate(args) => commands::simulate(args, seed(), cli.format)?,
        Command::Table1(args) => commands::table1(args, seed(), cli.format)?,
        Command::Classify(args) => commands::classify(args, seed(), cli.format)?,
        Command::ChiMax(args) => commands::chi_max(args, cli.format)?,
    };
    dest.write(&report.body)?;
    if let Some(summary) = report.summary {
        if dest.is_stdout() {
            eprint!("{summary}");
        } else {
            print!("{summary}");
        }
    }
    Ok(())
}
