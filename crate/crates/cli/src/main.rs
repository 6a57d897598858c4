//! `ramsey-stepup`: command-line front end for step-up colorings, `J''`
//! patterns, base-graph search, certificates and tower bounds.
//!
//! Exit codes: 0 pass, 1 usage or input error, 2 check failed, 3 a size
//! guard refused the request.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "ramsey-stepup",
    version,
    about = "Step-up colorings and three-colour Ramsey lower bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colour of one triple (by ranks) or the triple count of each colour
    Color {
        #[arg(long)]
        n: usize,
        /// Base graph file
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, num_args = 3, value_names = ["R1", "R2", "R3"])]
        triple: Option<Vec<u64>>,
    },
    /// Exhaustive search for a monochromatic (l+1)-clique on all 2^n strings
    VerifyBrute {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        l: usize,
    },
    /// J'' patterns
    #[command(subcommand)]
    Jpp(JppCommand),
    /// Sample base graphs until one passes the clique and pattern checks
    Search(SearchArgs),
    /// Certificates
    #[command(subcommand)]
    Cert(CertCommand),
    /// Tower lower bounds, or one application of the stepping-up lemma
    #[command(args_conflicts_with_subcommands = true)]
    Bounds(BoundsArgs),
    /// Expected clique and pattern counts for the sampling density
    Expect {
        #[arg(long)]
        l: u64,
        #[arg(long)]
        c: f64,
        /// Only this pattern size
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        p: Option<f64>,
    },
}

#[derive(Subcommand)]
enum JppCommand {
    /// Write every J'' shape on d vertices
    Enum {
        #[arg(long)]
        d: usize,
        /// Output file; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the region process on a delta sequence and print its trace
    Build {
        /// Comma-separated values, e.g. "3,1,2,4,2"
        #[arg(long)]
        seq: String,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    l: usize,
    #[arg(long)]
    c: f64,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    max_attempts: u64,
    /// Certificate output file
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum CertCommand {
    /// Replay every check recorded in a certificate
    Verify {
        cert: PathBuf,
        /// Also run the exhaustive step-up check
        #[arg(long)]
        brute: bool,
    },
}

#[derive(Args)]
struct BoundsArgs {
    #[command(subcommand)]
    stepup: Option<BoundsCommand>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l: Option<u64>,
    #[arg(long)]
    c: Option<f64>,
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// From r_k(l) >= 2^..^n to r_{k+1}(2l+k-4) >= 2^n
    Stepup {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u64,
        /// Tower expression, e.g. 10 or 2^2^3
        #[arg(long)]
        n: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            let guard = e
                .downcast_ref::<ramsey_stepup::Error>()
                .is_some_and(ramsey_stepup::Error::is_guard);
            ExitCode::from(if guard { 3 } else { 1 })
        }
    }
}
