use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fairteams::experiment::{run_experiment, ExperimentConfig};
use fairteams::fixtures::{check_fixture, paper_instance, FIXTURE_NAMES};
use fairteams::generate::{gen_random_instance, GeneratorConfig, PrefMode, SignMode, ValueRange};
use fairteams::verify::{check_property, DEFAULT_ENUMERATION_BUDGET};
use fairteams::{Algorithm, Allocation, Error, Instance, Property};

/// Fair allocation of players to teams with two-sided preferences.
#[derive(Parser)]
#[command(name = "fairteams", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Inclusive value range, e.g. -9..9.
        #[arg(long, default_value = "0..9", allow_hyphen_values = true)]
        values: ValueRange,
        /// any, nonneg, nonpos, binary or identical.
        #[arg(long, default_value = "any")]
        signs: SignMode,
        /// strict, weak or single-favorite.
        #[arg(long, default_value = "strict")]
        prefs: PrefMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run an algorithm on an instance and print the allocation.
    Solve {
        #[arg(long)]
        alg: Algorithm,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
    },
    /// Check properties of an allocation; exits 1 if any fails.
    Check {
        /// Comma-separated: ef1, ef11, balanced, swap, is, jef, po, team-po, player-po.
        #[arg(long, value_delimiter = ',', value_parser = parse_property, required = true)]
        props: Vec<Property>,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        allocation: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
    },
    /// List, print or verify the built-in example instances.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
    /// Run a randomized sweep described by a JSON config.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    /// Print the instance as JSON.
    Emit {
        name: String,
    },
    /// Verify the recorded facts of one fixture, or all of them.
    Check {
        name: Option<String>,
    },
}

fn parse_property(s: &str) -> Result<Property, String> {
    Property::from_short_name(s).ok_or_else(|| {
        let names: Vec<&str> = Property::ALL.iter().map(|p| p.short_name()).collect();
        format!(
            "unknown property '{s}', expected one of: {}",
            names.join(", ")
        )
    })
}

enum Failure {
    /// A property failed or a decision answered "no".
    No,
    Usage(String),
    Capacity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity { .. } => Failure::Capacity(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen {
            n,
            m,
            values,
            signs,
            prefs,
            seed,
            output,
        } => {
            let config = GeneratorConfig {
                num_teams: n,
                num_players: m,
                values,
                signs,
                prefs,
                seed,
            };
            emit(output.as_deref(), &gen_random_instance(&config)?.to_json())
        }
        Command::Solve {
            alg,
            input,
            output,
            budget,
        } => {
            let instance = Instance::from_json(&read(&input)?)?;
            match alg.run(&instance, budget)? {
                Some(allocation) => emit(output.as_deref(), &allocation.to_json()),
                None => {
                    eprintln!("no allocation with the required properties exists");
                    Err(Failure::No)
                }
            }
        }
        Command::Check {
            props,
            input,
            allocation,
            budget,
        } => {
            let instance = Instance::from_json(&read(&input)?)?;
            let allocation = Allocation::from_json(&read(&allocation)?, instance.num_teams())?;
            let reports = props
                .iter()
                .map(|&p| check_property(&instance, &allocation, p, budget))
                .collect::<Result<Vec<_>, _>>()?;
            println!(
                "{}",
                serde_json::to_string_pretty(&reports).expect("reports serialize")
            );
            if reports.iter().all(|r| r.holds) {
                Ok(())
            } else {
                Err(Failure::No)
            }
        }
        Command::Fixtures {
            action: FixtureAction::List,
        } => {
            for name in FIXTURE_NAMES {
                println!("{name}\t{}", paper_instance(name)?.description);
            }
            Ok(())
        }
        Command::Fixtures {
            action: FixtureAction::Emit { name },
        } => emit(None, &paper_instance(&name)?.instance.to_json()),
        Command::Fixtures {
            action: FixtureAction::Check { name },
        } => {
            let names: Vec<String> = match name {
                Some(name) => vec![name],
                None => FIXTURE_NAMES.iter().map(|s| s.to_string()).collect(),
            };
            let mut ok = true;
            for name in names {
                for check in check_fixture(&paper_instance(&name)?)? {
                    let fact = serde_json::to_string(&check.fact).expect("facts serialize");
                    println!(
                        "{} {name} {fact}",
                        if check.holds { "ok  " } else { "FAIL" }
                    );
                    ok &= check.holds;
                }
            }
            if ok {
                Ok(())
            } else {
                Err(Failure::No)
            }
        }
        Command::Experiment {
            config,
            output,
            csv,
        } => {
            let config = ExperimentConfig::from_json(&read(&config)?)?;
            let report = run_experiment(&config)?;
            if let Some(path) = csv {
                let file = fs::File::create(&path)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                report
                    .write_csv(file)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            emit(output.as_deref(), &report.to_json())?;
            let mut all_passed = true;
            let mut stderr = std::io::stderr().lock();
            for (name, s) in &report.summary {
                let _ = writeln!(
                    stderr,
                    "{name}: {}/{} passed, {} errors, {} no-answers",
                    s.passed, s.runs, s.errors, s.no_answers
                );
                if !s.failing_seeds.is_empty() {
                    let _ = writeln!(stderr, "  failing seeds: {:?}", s.failing_seeds);
                }
                all_passed &= s.passed == s.runs;
            }
            if all_passed {
                Ok(())
            } else {
                Err(Failure::No)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::No) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
