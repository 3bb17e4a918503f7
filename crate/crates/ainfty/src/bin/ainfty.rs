//! Thin command-line front end: parses flags, sizes the worker pool, runs
//! one command from [`ainfty::report`], and emits the report.
//!
//! Exit code 0 iff the run had no failures.  Wall time goes to stderr so
//! the report bytes depend only on the configuration.

use ainfty::report::{cmd_enumerate, cmd_verify, EnumerateTarget, RunConfig, VerifyTarget};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "ainfty", about = "Verification and enumeration sweeps for the star-shaped dual algebra pair", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification sweep; exit 0 iff no failures.
    Verify {
        /// What to verify.
        target: VerifyArg,
        #[command(flatten)]
        opts: CommonOpts,
        /// Corrupt the multiplication table first (self-test of the verifier).
        #[arg(long, hide = true)]
        mutate: bool,
    },
    /// Enumerate accepted operations, diagonal components, or homology classes.
    Enumerate {
        /// What to enumerate.
        target: EnumerateArg,
        /// Wrapping number for `algebra-a`.
        #[arg(long, default_value_t = 1)]
        j: u32,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyArg {
    AlgebraA,
    AlgebraB,
    BimoduleY,
    BimoduleDd,
    Diagonal,
    Duality,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateArg {
    AlgebraA,
    Diagonal,
    HomologyB,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Parser)]
struct CommonOpts {
    /// Number of spokes N (at least 2).
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Maximum operation inputs (default 2N).
    #[arg(long)]
    max_inputs: Option<usize>,
    /// Maximum total weight.
    #[arg(long, default_value_t = 1)]
    max_weight: u32,
    /// Maximum word length (default 2N + 2).
    #[arg(long)]
    max_len: Option<u32>,
    /// Random samples in randomized sweeps.
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    /// Seed for the counter-based generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl CommonOpts {
    fn config(&self, mutate: bool, j: u32) -> RunConfig {
        let mut cfg = RunConfig::defaults(self.n);
        if let Some(mi) = self.max_inputs {
            cfg.caps.max_inputs = mi;
        }
        cfg.caps.max_weight = self.max_weight;
        if let Some(ml) = self.max_len {
            cfg.caps.max_len = ml;
        }
        cfg.caps.samples = self.samples;
        cfg.caps.seed = self.seed;
        cfg.mutate = mutate;
        cfg.j = j;
        cfg
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("AINFTY_THREADS") {
        let threads: usize = threads.parse().expect("AINFTY_THREADS must be a number");
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("worker pool");
    }
    let start = Instant::now();
    let (report, opts) = match &cli.command {
        Command::Verify { target, opts, mutate } => {
            let target = match target {
                VerifyArg::AlgebraA => VerifyTarget::AlgebraA,
                VerifyArg::AlgebraB => VerifyTarget::AlgebraB,
                VerifyArg::BimoduleY => VerifyTarget::BimoduleY,
                VerifyArg::BimoduleDd => VerifyTarget::BimoduleDd,
                VerifyArg::Diagonal => VerifyTarget::Diagonal,
                VerifyArg::Duality => VerifyTarget::Duality,
            };
            (cmd_verify(target, &opts.config(*mutate, 1)), opts)
        }
        Command::Enumerate { target, j, opts } => {
            let target = match target {
                EnumerateArg::AlgebraA => EnumerateTarget::AlgebraA,
                EnumerateArg::Diagonal => EnumerateTarget::Diagonal,
                EnumerateArg::HomologyB => EnumerateTarget::HomologyB,
            };
            (cmd_enumerate(target, &opts.config(false, *j)), opts)
        }
    };
    eprintln!("{} finished in {:.2?}", report.command, start.elapsed());
    let rendered = match opts.format {
        FormatArg::Json => report.to_json(),
        FormatArg::Text => report.to_text(),
    };
    match &opts.out {
        Some(path) => std::fs::write(path, rendered).expect("write report"),
        None => {
            std::io::stdout()
                .write_all(rendered.as_bytes())
                .expect("write report");
        }
    }
    if report.is_success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
