use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use semicat_core::aut::{OrbitOptions, OrbitStrategy};
use semicat_core::json::SemigroupJson;
use semicat_core::Partition;
use semicat_cli::family::{render_table, run_family, Family, FamilySpec, Statistic};
use semicat_cli::io::{load_semigroup, read_json, to_pretty};
use semicat_cli::report::{self, CongruenceRequest, OrbitRequest};
use semicat_cli::verify::{run_suite, Suite, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "semicat", version, about = "Finite semigroups: automorphisms, orbits, congruences, decompositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    UnionFind,
    CanonicalForm,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum StatisticArg {
    Tau,
    OrbitCount,
    AutOrder,
}

#[derive(Subcommand)]
enum Command {
    /// Build a semigroup from a recipe and write its Cayley table.
    Construct {
        #[arg(long)]
        recipe: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural report: idempotents, regularity, index/period, optional Green's relations.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        green: bool,
    },
    /// Orbits of n-tuples under Aut(S) or a stabilizer.
    Orbits {
        file: PathBuf,
        #[arg(short = 'n', long)]
        n: usize,
        /// Elements fixed pointwise.
        #[arg(long, value_delimiter = ',')]
        fix: Vec<usize>,
        /// JSON list of subsets stabilized setwise.
        #[arg(long)]
        setwise: Option<PathBuf>,
        /// JSON partition; count orbits of class tuples instead.
        #[arg(long)]
        classes: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
        /// Omit orbit representatives.
        #[arg(long)]
        no_representatives: bool,
    },
    /// Automorphism group order, generators, orbits and characteristic ideal tower.
    Aut { file: PathBuf },
    /// Compute a congruence and its quotient.
    #[command(group(ArgGroup::new("which").required(true).args(["sigma", "mu", "generated", "rees"])))]
    Congruence {
        file: PathBuf,
        #[arg(long)]
        sigma: bool,
        #[arg(long)]
        mu: bool,
        /// JSON list of pairs.
        #[arg(long)]
        generated: Option<PathBuf>,
        /// JSON list of ideal elements.
        #[arg(long)]
        rees: Option<PathBuf>,
    },
    /// Greatest 0-direct decomposition.
    Decompose { file: PathBuf },
    /// A statistic along a parametrized family.
    Family {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, value_enum, default_value = "tau")]
        statistic: StatisticArg,
        /// Tuple length for orbit_count.
        #[arg(short = 'n', long, default_value_t = 1)]
        n: usize,
        /// Plain-text table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Run a theorem-check suite over built-in instances.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs a command; `Ok(false)` means a verification failure.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Construct { recipe, out } => {
            let s = load_semigroup(&recipe)?;
            emit(&to_pretty(&SemigroupJson::from(&s)), out.as_deref())?;
        }
        Command::Analyze { file, green } => {
            let s = load_semigroup(&file)?;
            print!("{}", to_pretty(&report::analyze(&s, green)?));
        }
        Command::Orbits {
            file,
            n,
            fix,
            setwise,
            classes,
            strategy,
            no_representatives,
        } => {
            let s = load_semigroup(&file)?;
            let req = OrbitRequest {
                fix,
                setwise: setwise.as_deref().map(read_json::<Vec<Vec<usize>>>).transpose()?,
                classes: classes.as_deref().map(read_json::<Partition>).transpose()?,
            };
            let opts = OrbitOptions {
                strategy: match strategy {
                    StrategyArg::Auto => OrbitStrategy::Auto,
                    StrategyArg::UnionFind => OrbitStrategy::UnionFind,
                    StrategyArg::CanonicalForm => OrbitStrategy::CanonicalForm,
                },
                representatives: !no_representatives,
                ..OrbitOptions::default()
            };
            print!("{}", to_pretty(&report::orbits(&s, n, &req, &opts)?));
        }
        Command::Aut { file } => {
            let s = load_semigroup(&file)?;
            print!("{}", to_pretty(&report::aut(&s)?));
        }
        Command::Congruence {
            file,
            sigma,
            mu,
            generated,
            rees,
        } => {
            let s = load_semigroup(&file)?;
            let req = match (sigma, mu, generated, rees) {
                (true, _, _, _) => CongruenceRequest::Sigma,
                (_, true, _, _) => CongruenceRequest::Mu,
                (_, _, Some(p), _) => CongruenceRequest::Generated(read_json(&p)?),
                (_, _, _, Some(p)) => CongruenceRequest::Rees(read_json(&p)?),
                _ => bail!("choose one of --sigma, --mu, --generated, --rees"),
            };
            print!("{}", to_pretty(&report::congruence(&s, &req)?));
        }
        Command::Decompose { file } => {
            let s = load_semigroup(&file)?;
            print!("{}", to_pretty(&report::decompose(&s)?));
        }
        Command::Family {
            family,
            from,
            to,
            statistic,
            n,
            table,
        } => {
            let spec = FamilySpec {
                family,
                from,
                to,
                statistic: match statistic {
                    StatisticArg::Tau => Statistic::Tau,
                    StatisticArg::OrbitCount => Statistic::OrbitCount { n },
                    StatisticArg::AutOrder => Statistic::AutOrder,
                },
            };
            let rep = run_family(&spec)?;
            if table {
                print!("{}", render_table(&rep));
            } else {
                print!("{}", to_pretty(&rep));
            }
        }
        Command::Verify { suite, seed } => {
            let rep = run_suite(suite, seed);
            print!("{}", to_pretty(&rep));
            return Ok(rep.passed);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
