use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gext::config::{OutputFormat, DEFAULT_MAX_DENOMINATOR, DEFAULT_MC_TRIALS, DEFAULT_PRECISION, DEFAULT_SUBGROUP_CAP};
use gext::RunConfig;
use gext_cli::{cmd_report, cmd_verify, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "gext", version, about = "Check skew group algebra and Galois correspondence statements on a field tower")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check and print the verdicts
    Verify(Opts),
    /// Print the subgroup and subfield lattices only
    Report(Opts),
}

#[derive(Args)]
struct Opts {
    /// Tower description file
    file: PathBuf,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Starting precision in bits for root isolation
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: u32,
    /// Bound on denominators of reconstructed coefficients
    #[arg(long, default_value_t = DEFAULT_MAX_DENOMINATOR)]
    max_denominator: u64,
    /// Largest group order whose subgroups are enumerated
    #[arg(long, default_value_t = DEFAULT_SUBGROUP_CAP)]
    subgroup_cap: usize,
    /// Random trials for the ideal test in positive characteristic
    #[arg(long, default_value_t = DEFAULT_MC_TRIALS)]
    mc_trials: usize,
    /// Accept defining polynomials without an irreducibility certificate
    #[arg(long)]
    trust_irreducible: bool,
}

impl Opts {
    fn config(&self) -> RunConfig {
        RunConfig {
            precision: self.precision,
            max_denominator: self.max_denominator,
            subgroup_cap: self.subgroup_cap,
            mc_trials: self.mc_trials,
            trust_irreducible: self.trust_irreducible,
            format: if self.json { OutputFormat::Json } else { OutputFormat::Text },
            ..RunConfig::default()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    let outcome = match &cli.command {
        Command::Verify(o) => cmd_verify(&o.file, &o.config()),
        Command::Report(o) => cmd_report(&o.file, &o.config()),
    };
    print!("{}", outcome.stdout);
    if !outcome.stderr.is_empty() {
        eprintln!("error: {}", outcome.stderr);
    }
    ExitCode::from(outcome.code as u8)
}
