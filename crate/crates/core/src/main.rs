use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use amds_core::cli::{cmd_analyze, cmd_bounds, cmd_enumerate, cmd_verify, VerifyTarget};

#[derive(Parser)]
#[command(name = "amds")]
#[command(about = "Analyze binary codes and verify the classification of systematic AMDS codes")]
#[command(version)]
struct Cli {
    /// Human-readable output instead of JSON
    #[arg(long, global = true)]
    pretty: bool,

    /// Omit wall-clock fields so repeated runs are byte-identical
    #[arg(long, global = true)]
    stable: bool,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Parameters, distributions and bound verdicts of a code file
    Analyze {
        /// Code file: one word per line, or `matrix` followed by generator rows
        file: PathBuf,
    },
    /// Enumerate systematic AMDS codes of length n and minimum distance d
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Report the count only
        #[arg(long)]
        count_only: bool,
        /// Collapse the result to isometry classes
        #[arg(long)]
        up_to_isometry: bool,
    },
    /// Singleton, Hamming, Plotkin and AMDS-dimension verdicts for (n, d)
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Run a verification campaign
    Verify {
        #[arg(long, value_enum)]
        target: VerifyTarget,
        /// Largest length examined (per-target default when omitted)
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("global pool is configured once");
    }

    let mut report = match cli.command {
        Commands::Analyze { file } => cmd_analyze(&file),
        Commands::Enumerate {
            n,
            d,
            count_only,
            up_to_isometry,
        } => cmd_enumerate(n, d, count_only, up_to_isometry),
        Commands::Bounds { n, d } => cmd_bounds(n, d),
        Commands::Verify { target, max_n } => cmd_verify(target, max_n),
    };
    if cli.stable {
        report.stabilize();
    }

    let rendered = if cli.pretty {
        report.to_text()
    } else {
        report.to_json(false) + "\n"
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(rendered.as_bytes());
    if let Some(err) = report.results.get("error").and_then(|e| e.as_str()) {
        eprintln!("error: {err}");
    }
    ExitCode::from(report.exit_code() as u8)
}
