//! `cyclab`: generators, spectrum searches and proof procedures on cubic
//! plane graphs.
//!
//! Exit codes: 0 verified or output produced, 1 refuted, 2 unknown (budget
//! exhausted), 3 usage or format error.

mod analyze;
mod corpus;
mod gen;
mod input;
mod lab;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Exit, Failure};

/// Default search budget in search-tree nodes.
pub const DEFAULT_BUDGET: u64 = 2_000_000_000;

#[derive(Parser)]
#[command(name = "cyclab", version, about = "Cycle spectra of cubic plane graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from one of the families.
    Gen(gen::GenArgs),
    /// Enumerate the full cycle spectrum.
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Assert that no cycle length lies in [A, B].
    CheckInterval {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Maximal gaps below the circumference.
    Gaps {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Shortest cycle.
    Girth {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Longest cycle found within the budget.
    Circumference {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Glue adjacent short faces around a marker face.
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        marker: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the counting inequalities after suppressing degree-2 vertices.
    Audit {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Look for a cycle with length in [k, 2k+9].
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        /// Also run hypothesis check, descent, reduction and audit.
        #[arg(long)]
        pipeline: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite an embedded graph in another format.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        to: Format,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Check a property over every graph in a directory.
    Corpus(corpus::CorpusArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file (planar_code, JSON or graph6); `-` or absent reads stdin.
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pc,
    Json,
}

fn run(cli: Cli) -> Result<Exit, Failure> {
    match cli.command {
        Command::Gen(args) => gen::run(args),
        Command::Spectrum { input, budget, json } => analyze::spectrum(&input::load(&input.file)?, budget, json),
        Command::CheckInterval { input, a, b, budget, json } => {
            analyze::check_interval(&input::load(&input.file)?, a, b, budget, json)
        }
        Command::Gaps { input, budget, json } => analyze::gaps(&input::load(&input.file)?, budget, json),
        Command::Girth { input, json } => analyze::girth(&input::load(&input.file)?, json),
        Command::Circumference { input, budget, json } => {
            analyze::circumference(&input::load(&input.file)?, budget, json)
        }
        Command::Reduce { input, k, marker, output, json } => {
            lab::reduce(&input::load_embedded(&input.file)?, k, marker, output.as_deref(), json)
        }
        Command::Audit { input, k, json } => lab::audit(&input::load_embedded(&input.file)?, k, json),
        Command::Verify { input, k, pipeline, budget, json } => {
            lab::verify(&input::load_embedded(&input.file)?, k, pipeline, budget, json)
        }
        Command::Convert { input, to, output } => {
            let graphs = input::load_embedded(&input.file)?;
            input::write_graphs(&graphs, to, output.as_deref())?;
            Ok(Exit::Ok)
        }
        Command::Corpus(args) => corpus::run(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Exit::Usage } else { Exit::Ok };
            let _ = e.print();
            return code.into();
        }
    };
    match run(cli) {
        Ok(code) => code.into(),
        Err(f) => {
            eprintln!("error: {f}");
            f.exit().into()
        }
    }
}
