//! `braidknot`: crossing-number bounds, closed-braid invariants, foliation
//! certificate checks, the braid-index decision procedure and the census.
//!
//! Exit codes: 0 pass, 1 fail, 2 error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use braidknot::search::DEFAULT_ENUM_CAP;

#[derive(Parser, Debug)]
#[command(
    name = "braidknot",
    version,
    about = "Closed braids, knot invariants and crossing-number bounds"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Refuse enumerations with more raw words than this.
    #[arg(long, global = true, env = "BRAIDKNOT_ENUM_CAP", default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Crossing-number bounds -chi+b <= c <= f(b)(-chi+b).
    Bounds(BoundsArgs),
    /// Fingerprint and polynomial invariants of a braid closure.
    Invariants {
        /// Braid word, e.g. "B3: 1 -2 1 -2".
        word: String,
    },
    /// Braid-foliation certificates.
    #[command(subcommand)]
    Foliation(FoliationCommand),
    /// Is the braid index at most n?
    Decide(DecideArgs),
    /// Knots of genus g and braid index n within the crossing budget.
    Census {
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        n: usize,
    },
    /// Knot table operations.
    #[command(subcommand)]
    Table(TableCommand),
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    /// Maximal Euler characteristic.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "row")]
    pub chi: Option<i64>,
    /// Braid index.
    #[arg(long, required_unless_present = "row")]
    pub b: Option<i64>,
    /// Take chi and b from this table row instead.
    #[arg(long, conflicts_with_all = ["chi", "b"])]
    pub row: Option<String>,
    /// Table for --row; defaults to the bundled one.
    #[arg(long, requires = "row")]
    pub table: Option<PathBuf>,
    /// Also check that this crossing number lies within the bounds.
    #[arg(long)]
    pub crossings: Option<i64>,
}

#[derive(Subcommand, Debug)]
enum FoliationCommand {
    /// Run the counting checks on a certificate JSON file ("-" for stdin).
    Check { file: PathBuf },
    /// Print the Bennequin-surface certificate of a braid word.
    Certificate { word: String },
}

#[derive(Args, Debug)]
pub struct DecideArgs {
    /// Target given by a braid word.
    #[arg(long, conflicts_with = "fingerprint", required_unless_present = "fingerprint")]
    pub word: Option<String>,
    /// Target given by a fingerprint JSON file ("-" for stdin).
    #[arg(long)]
    pub fingerprint: Option<PathBuf>,
    /// Maximal Euler characteristic of the target (trusted).
    #[arg(long, allow_hyphen_values = true)]
    pub chi: i64,
    #[arg(long)]
    pub n: usize,
}

#[derive(Subcommand, Debug)]
enum TableCommand {
    /// Check every row of a CSV table (the bundled one by default).
    Validate { path: Option<PathBuf> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Context {
        json: cli.json,
        cap: cli.enum_cap,
    };
    let result = match cli.command {
        Command::Bounds(args) => commands::bounds(&ctx, &args),
        Command::Invariants { word } => commands::invariants(&ctx, &word),
        Command::Foliation(FoliationCommand::Check { file }) => commands::foliation_check(&ctx, &file),
        Command::Foliation(FoliationCommand::Certificate { word }) => commands::foliation_certificate(&word),
        Command::Decide(args) => commands::decide(&ctx, &args),
        Command::Census { genus, n } => commands::census(&ctx, genus, n),
        Command::Table(TableCommand::Validate { path }) => commands::table_validate(&ctx, path.as_deref()),
    };
    match result {
        Ok(commands::Status::Pass) => ExitCode::SUCCESS,
        Ok(commands::Status::Fail) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
