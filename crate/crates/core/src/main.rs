use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use hopfpoly::budget::BUDGET_ENV;
use hopfpoly::document::{self, AntipodeFormat, MethodChoice, Object, ObjectDocument, VerifyLevel};
use hopfpoly::{Budget, Error, Result};

#[derive(Parser)]
#[command(name = "hopfpoly", version, about = "Polynomial invariants, antipodes and orientations of hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// JSON object document; reads stdin when absent or `-`.
    input: Option<PathBuf>,
    /// Step limit for orientation search and coloring enumeration.
    #[arg(long, env = BUDGET_ENV)]
    budget: Option<u64>,
    /// Worker threads (0 lets the pool decide).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Human-readable table instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// The polynomial invariant for a character, with evaluations.
    Chi {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "zeta1")]
        character: String,
        /// Integer points to evaluate at; negative values allowed.
        #[arg(long = "eval", allow_negative_numbers = true, value_delimiter = ',')]
        evals: Vec<i64>,
        #[arg(long, value_enum, default_value_t = MethodChoice::Both)]
        method: MethodChoice,
    },
    /// The antipode as a signed sum of hypergraphs.
    Antipode {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = AntipodeFormat::CancellationFree)]
        format: AntipodeFormat,
    },
    /// Orientations with their images and coloring counts.
    Orientations {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        acyclic_only: bool,
        /// Number of colors for the strict and compatible counts.
        #[arg(long)]
        count_colorings: Option<u32>,
    },
    /// Cross-checks every applicable computation route.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = VerifyLevel::Quick)]
        level: VerifyLevel,
    },
}

impl Common {
    fn budget(&self) -> Budget {
        self.budget.map(Budget::uniform).unwrap_or_default()
    }

    fn load(&self) -> Result<Object> {
        let mut text = String::new();
        match &self.input {
            Some(p) if p.as_os_str() != "-" => text = std::fs::read_to_string(p)?,
            _ => {
                io::stdin().read_to_string(&mut text)?;
            }
        }
        ObjectDocument::from_json(&text)?.load()
    }

    fn configure_pool(&self) {
        // only fails when a pool already exists, which is harmless here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(self.jobs).build_global();
    }
}

fn emit<T: Serialize>(common: &Common, report: &T, pretty: impl Fn(&T) -> String) -> Result<()> {
    let text = if common.pretty {
        pretty(report)
    } else {
        let mut s = serde_json::to_string_pretty(report)?;
        s.push('\n');
        s
    };
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Chi { common, character, evals, method } => {
            common.configure_pool();
            let object = common.load()?;
            let report = document::cmd_chi(&object, &character, &evals, method, &common.budget())?;
            emit(&common, &report, document::pretty_chi)
        }
        Command::Antipode { common, format } => {
            common.configure_pool();
            let object = common.load()?;
            let report = document::cmd_antipode(&object, format, &common.budget())?;
            emit(&common, &report, document::pretty_antipode)
        }
        Command::Orientations { common, acyclic_only, count_colorings } => {
            common.configure_pool();
            let object = common.load()?;
            let report = document::cmd_orientations(&object, acyclic_only, count_colorings, &common.budget())?;
            emit(&common, &report, document::pretty_orientations)
        }
        Command::Verify { common, level } => {
            common.configure_pool();
            let object = common.load()?;
            let report = document::cmd_verify(&object, level, &common.budget())?;
            emit(&common, &report, document::pretty_verify)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_status(&e))
        }
    }
}

fn exit_status(e: &Error) -> u8 {
    u8::try_from(e.exit_code()).unwrap_or(1)
}
