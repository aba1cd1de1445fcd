use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use fwsc::benchmarks::BenchmarkId;
use fwsc::FwscParams;
use fwsc_cli::bench::{run_suite, RunSettings};
use fwsc_cli::compare::{compare, write_comparison, wilcoxon_rows, ResultSource};
use fwsc_cli::config::ExperimentFile;
use fwsc_cli::engineering::{run_engineering, EngineeringSettings};
use fwsc_cli::{list_problems, with_workers, workers_from_env};

const DEFAULT_SEED: u64 = 42;
const DEFAULT_RUNS: usize = 30;
const DEFAULT_DIMENSION: usize = 30;

#[derive(Parser)]
#[command(name = "fwsc", version, about = "Fig tree-wasp optimizer experiments")]
struct Cli {
    /// TOML experiment file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Repeated runs on benchmark functions, written to summary.csv.
    Run {
        /// Problem ids such as F1 (comma separated or repeated); all by default.
        #[arg(long, value_delimiter = ',')]
        problem: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        runs: Option<usize>,
        /// Dimension for the scalable functions F1-F13.
        #[arg(long)]
        dim: Option<usize>,
        /// Generations per run; 0 evaluates the initial trees only.
        #[arg(long)]
        iterations: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write one convergence trace per run.
        #[arg(long)]
        trace: bool,
    },
    /// Best feasible design for pressure-vessel, stepped-beam or welded-beam.
    Engineering {
        problem: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        runs: Option<usize>,
        #[arg(long)]
        iterations: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Friedman and Wilcoxon tables from result files (`NAME=PATH` or `PATH`).
    Stats {
        #[arg(required = true, num_args = 2..)]
        files: Vec<String>,
        /// Algorithm every other one is compared against; the last file by default.
        #[arg(long)]
        reference: Option<String>,
        /// Summary column to compare.
        #[arg(long, default_value = "mean")]
        column: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate problem ids.
    List,
}

fn base(file: &ExperimentFile, iterations: Option<usize>) -> Result<FwscParams<f64>> {
    let mut params = file.params.apply(FwscParams::default())?;
    if let Some(k) = iterations {
        params.max_iterations = k;
    }
    Ok(params)
}

fn out_dir(flag: Option<PathBuf>, file: &ExperimentFile) -> PathBuf {
    flag.or_else(|| file.out.as_ref().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("results"))
}

fn resolve_problems(ids: &[String], dim: Option<usize>) -> Result<Vec<(BenchmarkId, usize)>> {
    let ids: Vec<BenchmarkId> = if ids.is_empty() {
        BenchmarkId::ALL.to_vec()
    } else {
        ids.iter().map(|s| s.parse()).collect::<fwsc::Result<_>>()?
    };
    ids.into_iter()
        .map(|id| {
            let d = if id.is_scalable() { dim.unwrap_or(DEFAULT_DIMENSION) } else { id.default_dimension() };
            id.check_dimension(d)?;
            Ok((id, d))
        })
        .collect()
}

fn execute(cli: Cli) -> Result<()> {
    let file = match &cli.config {
        Some(path) => ExperimentFile::load(path)?,
        None => ExperimentFile { schema_version: fwsc_cli::config::SCHEMA_VERSION, ..Default::default() },
    };
    let workers = workers_from_env()?;
    match cli.command {
        Command::Run { problem, seed, runs, dim, iterations, out, trace } => {
            let ids = if problem.is_empty() { file.problems.clone().unwrap_or_default() } else { problem };
            let settings = RunSettings {
                seed: seed.or(file.seed).unwrap_or(DEFAULT_SEED),
                runs: runs.or(file.runs).unwrap_or(DEFAULT_RUNS),
                problems: resolve_problems(&ids, dim.or(file.dimension))?,
                params: base(&file, iterations)?,
                trace: trace || file.trace.unwrap_or(false),
                out: out_dir(out, &file),
            };
            let rows = with_workers(workers, || run_suite(&settings))??;
            println!("problem,dimension,best,mean,std");
            for r in rows {
                println!("{},{},{:.6e},{:.6e},{:.6e}", r.problem, r.dimension, r.best, r.mean, r.std);
            }
            println!("wrote {}", settings.out.display());
        }
        Command::Engineering { problem, seed, runs, iterations, out } => {
            let mut settings = EngineeringSettings::new(&problem, out_dir(out, &file));
            settings.seed = seed.or(file.seed).unwrap_or(DEFAULT_SEED);
            settings.runs = runs.or(file.runs).unwrap_or(DEFAULT_RUNS);
            settings.params = base(&file, iterations)?;
            let report = with_workers(workers, || run_engineering(&settings))??;
            print!("{}", report.render());
        }
        Command::Stats { files, reference, column, out } => {
            let sources: Vec<ResultSource> = files.iter().map(|f| ResultSource::parse(f)).collect();
            let c = compare(&sources, &column, reference.as_deref())?;
            let out = out_dir(out, &file);
            std::fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
            write_comparison(&out, &c)?;
            for (name, (m, r)) in c.matrix.algorithms().iter().zip(c.ranks.mean_ranks.iter().zip(&c.ranks.ranking)) {
                println!("{name}: mean rank {m:.4}, ranking {r}");
            }
            println!("friedman chi-square {:.4}, p {:.4e}", c.test.chi_square, c.test.p_value);
            for row in wilcoxon_rows(&c.pairwise) {
                println!("{}", row.join(", "));
            }
        }
        Command::List => print!("{}", list_problems()),
    }
    Ok(())
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
