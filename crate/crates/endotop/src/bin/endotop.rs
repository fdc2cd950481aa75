//! Batch CLI over the library: basis tables, property reports, map
//! reports, equality verdicts and registry sweeps.
//!
//! Exit codes: 0 success, 1 malformed input, 2 violated construction
//! precondition (for example an orbit space over a map that is not
//! one-to-one), 3 internal consistency failure (the closed-form and
//! materialized deciders disagreed).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use endotop::error::{Error, Result};
use endotop::instance::InstanceFile;
use endotop::output::{
    basis_document, check_document, equal_document, map_document, render_basis, render_value,
    verify_document, Format, SpaceChoice,
};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Tsv => Format::Tsv,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpaceArg {
    /// The periodic-point chain
    Tau1,
    /// The complement chain (defined only for maps without periodic points)
    #[value(name = "tau1c")]
    Tau1c,
    /// The image-shell chain
    Tau2,
    /// The orbit topology of a one-to-one map
    Tau3,
}

impl From<SpaceArg> for SpaceChoice {
    fn from(s: SpaceArg) -> SpaceChoice {
        match s {
            SpaceArg::Tau1 => SpaceChoice::Tau1,
            SpaceArg::Tau1c => SpaceChoice::Tau1Complement,
            SpaceArg::Tau2 => SpaceChoice::Tau2,
            SpaceArg::Tau3 => SpaceChoice::Tau3,
        }
    }
}

const WINDOW_HELP: &str = "Materialization depth for the chain bases (default: carrier size \
                           + 2; the chain's order structure makes deeper windows redundant \
                           for the bundled deciders)";

#[derive(Parser)]
#[command(
    name = "endotop",
    version,
    about = "Fuzzy topologies induced by a self-map on a finite carrier: exact construction, \
             property deciders and an exhaustive claim-checking sweep"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: FormatArg,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Print the basis grade table of a space, one row per basis set
    Basis {
        /// Which space to build
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long, help = WINDOW_HELP)]
        window: Option<u32>,
        /// Instance description (JSON)
        instance: PathBuf,
    },
    /// Decide compactness, connectedness, T0, regularity, normality and
    /// the Lindelöf property of a space
    Check {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long, help = WINDOW_HELP)]
        window: Option<u32>,
        instance: PathBuf,
    },
    /// Decide whether the map is open and continuous on a space
    Map {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long, help = WINDOW_HELP)]
        window: Option<u32>,
        instance: PathBuf,
    },
    /// Compare two spaces over the same instance
    Equal {
        #[arg(long, value_enum)]
        left: SpaceArg,
        #[arg(long, value_enum)]
        right: SpaceArg,
        #[arg(long, help = WINDOW_HELP)]
        window: Option<u32>,
        instance: PathBuf,
    },
    /// Evaluate the full claim registry on every map up to a carrier size
    Verify {
        /// Largest carrier size to enumerate (at most 6)
        #[arg(long)]
        max_size: usize,
        /// Orbit depth parameters, comma separated (for example 1,2,3)
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        k: Vec<u32>,
        /// Materialization window (default: max_size + 2, the minimum allowed)
        #[arg(long)]
        window: Option<u32>,
    },
}

fn load(path: &PathBuf) -> Result<InstanceFile> {
    let bytes = std::fs::read(path)?;
    InstanceFile::from_json(&bytes)
}

fn run(cli: Cli) -> Result<String> {
    let format: Format = cli.format.into();
    match cli.command {
        Commands::Basis {
            space,
            window,
            instance,
        } => {
            let file = load(&instance)?;
            let doc = basis_document(&file, space.into(), window)?;
            render_basis(&doc, format)
        }
        Commands::Check {
            space,
            window,
            instance,
        } => {
            let file = load(&instance)?;
            let doc = check_document(&file, space.into(), window)?;
            render_value(&doc, format)
        }
        Commands::Map {
            space,
            window,
            instance,
        } => {
            let file = load(&instance)?;
            let doc = map_document(&file, space.into(), window)?;
            render_value(&doc, format)
        }
        Commands::Equal {
            left,
            right,
            window,
            instance,
        } => {
            let file = load(&instance)?;
            let doc = equal_document(&file, left.into(), right.into(), window)?;
            render_value(&doc, format)
        }
        Commands::Verify {
            max_size,
            k,
            window,
        } => {
            let report = verify_document(max_size, k, window)?;
            let value = serde_json::to_value(&report).map_err(Error::from)?;
            render_value(&value, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(document) => {
            // single atomic write of the whole document
            print!("{document}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
