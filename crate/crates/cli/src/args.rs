//! Command-line grammar.
//!
//! `cubechaos <command>` with shared flags `--dim`, `--depth`, `--steps`,
//! `--seed`, `--order`, `--out`, `--format` and per-command flags
//! (`--init`, `--prefix`, `--k`, `--target`, `--segments`). Flag parsing
//! errors exit with code 2.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "cubechaos",
    version,
    about = "Exact shift dynamics on subdivision codes of the unit cube"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Iterate the shift from an initial point and export the trajectory.
    Orbit(OrbitArgs),
    /// Run an exact verification suite and write its JSON report.
    Verify(VerifyArgs),
    /// Build the code whose orbit visits every sub-cube up to an order.
    Dense(DenseArgs),
    /// Build the periodic approximant of a target code.
    Periodic(PeriodicArgs),
    /// Build a sensitivity pair from a code prefix.
    Sensitivity(SensitivityArgs),
    /// Build a scrambled pair with alternating agree/disagree runs.
    Liyorke(LiyorkeArgs),
    /// Tent-map itinerary, prefix interval, and semiconjugacy check.
    Tent(TentArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(clap::Args, Debug)]
pub struct OrbitArgs {
    /// Cube dimension n.
    #[arg(long = "dim", default_value_t = 1)]
    pub dim: u32,
    /// Initial point: comma-separated coordinates, decimal or num/den.
    #[arg(long)]
    pub init: String,
    /// Number of shift steps to record.
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    /// Encoding order of the initial point (default: steps + 30).
    #[arg(long)]
    pub depth: Option<usize>,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Property {
    /// Sub-cube diameters shrink as n/16^k, exactly.
    Diagonal,
    /// Every first-order cube has a partner at squared distance >= n/16.
    Separation,
    /// The block-enumeration code visits every order-q sub-cube.
    Transitivity,
    /// Periodic approximants land inside their targets.
    Periodic,
    /// Scrambled-pair agree/disagree checkpoint inequalities.
    Liyorke,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Property suite to run.
    #[arg(value_enum)]
    pub property: Property,
    /// Cube dimension n.
    #[arg(long = "dim", default_value_t = 1)]
    pub dim: u32,
    /// Order parameter: max order for diagonal, block order for
    /// transitivity, period for periodic.
    #[arg(long)]
    pub order: Option<usize>,
    /// Sample count for the seeded suites.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// RNG seed for the seeded suites.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Segment count for the liyorke suite.
    #[arg(long, default_value_t = 10)]
    pub segments: usize,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format (reports are JSON only).
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(clap::Args, Debug)]
pub struct DenseArgs {
    /// Cube dimension n.
    #[arg(long = "dim", default_value_t = 1)]
    pub dim: u32,
    /// Highest sub-cube order the orbit must visit.
    #[arg(long, default_value_t = 2)]
    pub order: usize,
    /// Cap on the constructed code length (default: 2^20).
    #[arg(long)]
    pub depth: Option<usize>,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format (exports are JSON only).
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(clap::Args, Debug)]
pub struct PeriodicArgs {
    /// Cube dimension n.
    #[arg(long = "dim", default_value_t = 1)]
    pub dim: u32,
    /// Target code digits, e.g. "5,9".
    #[arg(long)]
    pub target: String,
    /// Approximant order (default: two repetitions of the target).
    #[arg(long)]
    pub depth: Option<usize>,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format (exports are JSON only).
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(clap::Args, Debug)]
pub struct SensitivityArgs {
    /// Cube dimension n.
    #[arg(long = "dim", default_value_t = 1)]
    pub dim: u32,
    /// Code to perturb, e.g. "2,2"; extended cyclically when shorter
    /// than k+1 digits.
    #[arg(long)]
    pub prefix: String,
    /// Number of digits the pair shares before separating.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format (exports are JSON only).
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(clap::Args, Debug)]
pub struct LiyorkeArgs {
    /// Cube dimension n.
    #[arg(long = "dim", default_value_t = 1)]
    pub dim: u32,
    /// Number of agree/disagree alternations.
    #[arg(long, default_value_t = 10)]
    pub segments: usize,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format (exports are JSON only).
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(clap::Args, Debug)]
pub struct TentArgs {
    /// Point in [0,1]: decimal or num/den.
    #[arg(long)]
    pub init: String,
    /// Itinerary length.
    #[arg(long, default_value_t = 8)]
    pub depth: usize,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format (exports are JSON only).
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}
