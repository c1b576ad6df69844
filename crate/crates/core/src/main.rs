use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qtoep::circulant::FiberFault;
use qtoep::experiment::{self, ExperimentConfig};
use qtoep::selftest;
use qtoep::symbol::{builtin, json};

/// Quaternion block Toeplitz experiments and invariant checks.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment described by a TOML config. Relative output
    /// directories are resolved against $QTOEP_OUT_DIR, or the working directory.
    Run {
        /// Path to the experiment config.
        #[arg(long)]
        config: PathBuf,
    },
    /// Run the seeded invariant suites at small sizes.
    Selftest {
        /// Seed of the random generators.
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
        /// Corrupt part of the computation to check that the suites notice.
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Write the JSON description of a builtin symbol.
    ExportSymbol {
        /// Builtin name: herm_cont_2x2, nonherm_cont_2x2, herm_l1_2x2,
        /// nonherm_l1_2x2, herm_1d or nonherm_1d.
        #[arg(long)]
        builtin: String,
        /// Destination file.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Fault {
    FlipSign,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> qtoep::Result<ExitCode> {
    match command {
        Command::Run { config } => {
            let cfg = ExperimentConfig::load(&config)?;
            let summary = experiment::run(&cfg)?;
            print!("{}", summary.render());
            println!("output: {}", cfg.output.display());
            let failed = summary.failed_suites();
            if failed.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                for c in failed {
                    eprintln!("check suite `{c}` failed");
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Selftest { seed, inject_fault } => {
            let fault = match inject_fault {
                Some(Fault::FlipSign) => FiberFault::FlipSign,
                None => FiberFault::None,
            };
            let results = selftest::run_all(seed, fault);
            let mut ok = true;
            for r in &results {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                println!("{:<14} {status} ({} cases)", r.name, r.cases);
                for f in &r.failures {
                    eprintln!("  {}: {f}", r.name);
                }
                if !r.passed() {
                    eprintln!("suite `{}` failed", r.name);
                    ok = false;
                }
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::ExportSymbol { builtin: name, out } => {
            let spec = builtin::builtin(&name)?;
            std::fs::write(&out, json::to_json(&spec)? + "\n")?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
