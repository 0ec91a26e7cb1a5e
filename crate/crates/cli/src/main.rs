use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod report;

#[derive(Parser)]
#[command(name = "fullerene", version, about = "Anti-forcing numbers and the anti-forcing-4 construction for fullerenes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a graph file describes a fullerene.
    Validate {
        /// Graph file, or `fixture:f20` / `fixture:f24` / `fixture:f26`.
        path: String,
    },
    /// Anti-forcing number with a witness set.
    Af {
        path: String,
        #[arg(long, default_value_t = 6)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Forcing number with a witness matching.
    Forcing {
        path: String,
        #[arg(long, default_value_t = 5)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Cyclic edge connectivity.
    Cec { path: String },
    /// Builds the distance-array digraph.
    Digraph {
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Builds a fullerene with anti-forcing number 4 on `n` vertices.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest order whose anti-forcing number is re-checked by search.
        #[arg(long, default_value_t = 32)]
        verify_limit: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Replays a walk file from a seed graph.
    Synthesize {
        /// Seed name such as `Fs15`, or just `15`.
        #[arg(long)]
        seed: String,
        #[arg(long)]
        walk: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 32)]
        verify_limit: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Runs every acceptance check.
    VerifyAll {
        /// Directory holding f20.graph, f24.graph and f26.graph; embedded copies otherwise.
        #[arg(long)]
        fixture_dir: Option<PathBuf>,
        #[arg(long)]
        no_timings: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Writes the embedded fixtures and the F20 walk to a directory.
    Fixture {
        #[arg(long)]
        dir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let report = match cli.command {
        Command::Validate { path } => commands::validate(echo, &path),
        Command::Af { path, budget, jobs } => commands::af(echo, &path, budget, jobs),
        Command::Forcing { path, budget, jobs } => commands::forcing(echo, &path, budget, jobs),
        Command::Cec { path } => commands::cec(echo, &path),
        Command::Digraph { dot, dump } => commands::digraph(echo, dot, dump),
        Command::Construct { n, out, verify_limit, jobs } => commands::construct(echo, n, out, verify_limit, jobs),
        Command::Synthesize { seed, walk, out, verify_limit, jobs } => {
            commands::synthesize(echo, &seed, &walk, out, verify_limit, jobs)
        }
        Command::VerifyAll { fixture_dir, no_timings, jobs } => {
            commands::verify_all(echo, fixture_dir, !no_timings, jobs)
        }
        Command::Fixture { dir } => commands::export_fixtures(echo, &dir),
    };
    println!("{report}");
    ExitCode::from(report.exit as u8)
}
