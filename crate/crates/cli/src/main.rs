use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use skewlab_cli::commands::{self, parse_bounds, CheckArgs};
use skewlab_core::Bounds;

#[derive(Parser)]
#[command(name = "skewlab", version, about = "Exhaustive checks of skew McCoy-type properties on finite modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one property of an instance described in a JSON file.
    Check {
        property: String,
        file: PathBuf,
        /// Degree bounds `p,q` for module and ring polynomials.
        #[arg(long, value_parser = parse_bounds, default_value = "2,2")]
        bounds: Bounds,
        /// Worker threads; the report does not depend on it.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a registered worked example, or all of them.
    Example {
        name: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the law suite over a corpus of instance descriptors.
    Laws {
        corpus: PathBuf,
        #[arg(long, value_parser = parse_bounds, default_value = "2,2")]
        bounds: Bounds,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut stdout, mut stderr) = (std::io::stdout(), std::io::stderr());
    let result = match cli.command {
        Command::Check { property, file, bounds, jobs, out } => {
            commands::check(&CheckArgs { property, file, bounds, jobs, out }, &mut stdout, &mut stderr)
        }
        Command::Example { name, jobs, out } => commands::example(&name, jobs, out.as_deref(), &mut stdout, &mut stderr),
        Command::Laws { corpus, bounds, jobs, out } => {
            commands::laws(&corpus, bounds, jobs, out.as_deref(), &mut stdout, &mut stderr)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::EXIT_INPUT)
        }
    }
}
