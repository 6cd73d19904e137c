//! `veracity`: drive the classification pipeline stage by stage. Every
//! subcommand reads prior artifacts from the output directory and writes
//! its own; nothing is ever mutated in place.

mod artifacts;
mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{Overrides, RunConfig};

#[derive(Parser)]
#[command(name = "veracity", version, about = "News-veracity pipeline driver")]
struct Cli {
    /// Run configuration file (flat TOML).
    #[arg(long, global = true, default_value = "veracity.toml")]
    config: PathBuf,
    /// Seed override; some seed is mandatory for every run.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Restrict the run to a single word count (30, 60, 90 or 120).
    #[arg(long, global = true)]
    words: Option<u32>,
    /// Output directory override.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Skip component reduction.
    #[arg(long, global = true)]
    no_reduce: bool,
    /// Feature vector weighting: `count` or `tfidf`.
    #[arg(long, global = true)]
    vector_mode: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize the raw corpus and freeze the train/validation/test split.
    Ingest,
    /// Clean, stem and truncate every article at each word count.
    Prep,
    /// Build the training-split vocabulary per word count.
    Vocab,
    /// Fit every zoo classifier and store the models.
    Train,
    /// Rank the zoo, emit the leaderboard, and store the winning model.
    Select,
    /// Score a stored model on the held-out test split.
    Evaluate {
        /// Model file to score; defaults to the selection winner.
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Compare linguistic and word-distribution features across sides.
    Analyze,
    /// Assemble the human-readable digest from stored artifacts.
    Report,
}

impl Command {
    fn stage_name(&self) -> &'static str {
        match self {
            Command::Ingest => "ingest",
            Command::Prep => "prep",
            Command::Vocab => "vocab",
            Command::Train => "train",
            Command::Select => "select",
            Command::Evaluate { .. } => "evaluate",
            Command::Analyze => "analyze",
            Command::Report => "report",
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let overrides = Overrides {
        seed: cli.seed,
        words: cli.words,
        out: cli.out.clone(),
        no_reduce: cli.no_reduce,
        vector_mode: cli.vector_mode.clone(),
    };
    let config = RunConfig::load(&cli.config, &overrides)?;
    config.write_copy()?;
    match &cli.command {
        Command::Ingest => commands::ingest(&config),
        Command::Prep => commands::prep(&config),
        Command::Vocab => commands::vocab(&config),
        Command::Train => commands::train(&config),
        Command::Select => commands::select(&config),
        Command::Evaluate { model } => commands::evaluate(&config, model.as_deref()),
        Command::Analyze => commands::analyze(&config),
        Command::Report => commands::report(&config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("veracity {}: {err:#}", cli.command.stage_name());
            ExitCode::FAILURE
        }
    }
}
