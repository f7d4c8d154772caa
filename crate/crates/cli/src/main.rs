use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mckay_cli::commands::{self, parse_type, ShriekOptions};
use mckay_cli::{acceptance, render, CliError, Format};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "mckay", version, about = "Exact computations for McKay quiver varieties of Kleinian singularities")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for every randomized construction (ChaCha8).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for corpus-wide work; results are merged in a fixed order.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root data of an ADE type: delta, Cartan matrix, positive roots, |Γ|.
    Info { r#type: String },
    /// Stability-parameter arrangement, chamber count, |W| and wall types.
    Chambers { r#type: String, n: usize },
    /// Stability verdict for a framed representation stored as JSON.
    Stability {
        rep_file: PathBuf,
        /// C+, theta0, thetaI:0,2, zero, or theta:a,b,... (F2/F3 only)
        #[arg(long, default_value = "C+")]
        theta: String,
    },
    /// tau(I) = I ∩ k[x,y]^Γ in u, v, w, with its colength and support.
    Tau { r#type: String, n: usize, ideal: String },
    /// The framed representation k[x,y]/I as JSON.
    Rep { r#type: String, n: usize, ideal: String },
    /// j_!(N) for N = R₀/J, J given in u, v, w.
    Shriek {
        r#type: String,
        ideal: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = 4)]
        window: usize,
    },
    /// Run acceptance criteria 1-12 and print the report.
    Selftest,
}

fn run(cli: &Cli) -> Result<Value, CliError> {
    match &cli.command {
        Command::Info { r#type } => commands::info(parse_type(r#type)?),
        Command::Chambers { r#type, n } => commands::chambers(parse_type(r#type)?, *n),
        Command::Stability { rep_file, theta } => commands::stability(&std::fs::read_to_string(rep_file)?, theta),
        Command::Tau { r#type, n, ideal } => commands::tau_report(parse_type(r#type)?, *n, ideal),
        Command::Rep { r#type, n, ideal } => commands::rep_report(parse_type(r#type)?, *n, ideal),
        Command::Shriek { r#type, ideal, max_degree, window } => {
            commands::shriek_report(parse_type(r#type)?, ideal, &ShriekOptions { max_degree: *max_degree, window: *window })
        }
        Command::Selftest => Ok(acceptance::report(cli.seed, &acceptance::run_all(cli.seed))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = std::io::stdout().lock();
    match run(&cli) {
        Ok(v) => {
            let failed = v.get("passed").and_then(Value::as_bool) == Some(false);
            let _ = out.write_all(render(&v, cli.format).as_bytes());
            // selftest failures and failed shriek checks
            ExitCode::from(if failed { 1 } else { 0 })
        }
        Err(e) => {
            if let CliError::Uncertified(partial) = &e {
                let _ = out.write_all(render(partial, cli.format).as_bytes());
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
