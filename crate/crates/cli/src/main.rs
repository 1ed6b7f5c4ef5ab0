use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gkzrank_cli::report::AnalyzeOptions;
use gkzrank_cli::sampler::SamplerSpec;
use gkzrank_cli::CommandOutput;

#[derive(Parser)]
#[command(name = "gkzrank", version, about = "Exact ranks of three-row A-hypergeometric systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis report for a matrix file.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        window: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random rational parameters to evaluate in addition to the sweep.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Rank at one parameter, coordinates given as p/q.
    Rank {
        file: PathBuf,
        #[arg(num_args = 3, allow_hyphen_values = true)]
        beta: Vec<String>,
    },
    /// Sweep random configurations and check that rank / vol stays below 2.
    VerifyBound {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        ncols_max: usize,
        #[arg(long)]
        entry_max: i64,
        #[arg(long)]
        window: i64,
        #[arg(long, default_value_t = 60)]
        vol_cap: u64,
        /// Draw entries from [-E, E] instead of [0, E].
        #[arg(long)]
        signed: bool,
        /// Also sweep the shipped fixture configurations.
        #[arg(long)]
        with_fixtures: bool,
    },
    /// Run every fixture of a corpus directory (the shipped corpus by default).
    Corpus { dir: Option<PathBuf> },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { gkzrank_cli::EXIT_INPUT as u8 } else { 0 });
        }
    };
    let out: CommandOutput = match cli.command {
        Command::Analyze {
            file,
            window,
            seed,
            samples,
        } => gkzrank_cli::cmd_analyze(&file, AnalyzeOptions { window, seed, samples }),
        Command::Rank { file, beta } => gkzrank_cli::cmd_rank(&file, &beta),
        Command::VerifyBound {
            seed,
            count,
            ncols_max,
            entry_max,
            window,
            vol_cap,
            signed,
            with_fixtures,
        } => {
            let mut spec = SamplerSpec::new(seed, count, ncols_max, entry_max, vol_cap);
            spec.signed = signed;
            gkzrank_cli::cmd_verify_bound(&spec, window, with_fixtures)
        }
        Command::Corpus { dir } => gkzrank_cli::cmd_corpus(dir.as_deref()),
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
