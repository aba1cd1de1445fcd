//! `fwsc run`: repeated seeded runs over the benchmark suite.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use fwsc::benchmarks::{make_benchmark, BenchmarkId};
use fwsc::engine::{initial_sample, run};
use fwsc::{derive_seed, FwscParams, Outcome};
use rayon::prelude::*;

use crate::output::{sci, write_csv};

pub const SUMMARY_FILE: &str = "summary.csv";
pub const RUNS_FILE: &str = "runs.csv";
pub const SUMMARY_HEADER: [&str; 7] = ["problem", "dimension", "runs", "best", "worst", "mean", "std"];

#[derive(Debug, Clone)]
pub struct RunSettings {
    pub seed: u64,
    pub runs: usize,
    pub problems: Vec<(BenchmarkId, usize)>,
    pub params: FwscParams<f64>,
    pub trace: bool,
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub problem: BenchmarkId,
    pub dimension: usize,
    pub best: f64,
    pub worst: f64,
    pub mean: f64,
    pub std: f64,
    pub outcomes: Vec<Outcome>,
}

/// Population statistics of the per-run best values.
pub fn summarize(values: &[f64]) -> (f64, f64, f64, f64) {
    let n = values.len() as f64;
    let best = values.iter().copied().fold(f64::INFINITY, f64::min);
    let worst = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    (best, worst, mean, var.sqrt())
}

pub fn run_seed(master: u64, problem: BenchmarkId, dimension: usize, run: usize) -> u64 {
    derive_seed(master, &problem.to_string(), &[dimension as u64, run as u64])
}

/// Runs every (problem, run) pair in parallel and writes `summary.csv`,
/// `runs.csv` and, when asked, one trace file per run. Output does not depend
/// on the worker count.
pub fn run_suite(settings: &RunSettings) -> Result<Vec<SummaryRow>> {
    let jobs: Vec<(usize, BenchmarkId, usize, usize)> = settings
        .problems
        .iter()
        .enumerate()
        .flat_map(|(slot, &(id, dim))| (0..settings.runs).map(move |r| (slot, id, dim, r)))
        .collect();
    let problems = settings
        .problems
        .iter()
        .map(|&(id, dim)| make_benchmark::<f64>(id, dim))
        .collect::<fwsc::Result<Vec<_>>>()?;

    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|&(slot, id, dim, r)| {
            let seed = run_seed(settings.seed, id, dim, r);
            if settings.params.max_iterations == 0 {
                initial_sample(&problems[slot], &settings.params, seed)
            } else {
                run(&problems[slot], &settings.params, seed)
            }
        })
        .collect::<fwsc::Result<_>>()?;

    let mut rows = Vec::new();
    for (slot, &(id, dim)) in settings.problems.iter().enumerate() {
        let mine: Vec<Outcome> = jobs
            .iter()
            .zip(&outcomes)
            .filter(|((s, ..), _)| *s == slot)
            .map(|(_, o)| o.clone())
            .collect();
        let finals: Vec<f64> = mine.iter().map(|o| o.best_fitness).collect();
        let (best, worst, mean, std) = summarize(&finals);
        rows.push(SummaryRow { problem: id, dimension: dim, best, worst, mean, std, outcomes: mine });
    }
    write_outputs(settings, &rows)?;
    Ok(rows)
}

fn write_outputs(settings: &RunSettings, rows: &[SummaryRow]) -> Result<()> {
    let out = &settings.out;
    std::fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let summary: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.problem.to_string(),
                r.dimension.to_string(),
                r.outcomes.len().to_string(),
                sci(r.best),
                sci(r.worst),
                sci(r.mean),
                sci(r.std),
            ]
        })
        .collect();
    write_csv(&out.join(SUMMARY_FILE), &SUMMARY_HEADER, &summary)?;

    let mut per_run = Vec::new();
    for r in rows {
        for (i, o) in r.outcomes.iter().enumerate() {
            per_run.push(vec![
                r.problem.to_string(),
                r.dimension.to_string(),
                i.to_string(),
                o.seed.to_string(),
                sci(o.best_fitness),
                o.evaluations.to_string(),
            ]);
            if settings.trace {
                write_trace(out, r.problem, r.dimension, o)?;
            }
        }
    }
    write_csv(
        &out.join(RUNS_FILE),
        &["problem", "dimension", "run", "seed", "best", "evaluations"],
        &per_run,
    )
}

pub fn trace_path(out: &Path, problem: BenchmarkId, dimension: usize, seed: u64) -> PathBuf {
    out.join(format!("trace_{problem}_d{dimension}_{seed}.csv"))
}

fn write_trace(out: &Path, problem: BenchmarkId, dimension: usize, o: &Outcome) -> Result<()> {
    let rows: Vec<Vec<String>> = o
        .trace
        .iter()
        .enumerate()
        .map(|(i, v)| vec![(i + 1).to_string(), sci(*v)])
        .collect();
    write_csv(&trace_path(out, problem, dimension, o.seed), &["iteration", "best_so_far"], &rows)
}
