//! `fwsc engineering`: best feasible design over repeated penalized runs.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::Result;
use fwsc::constrained::{by_id, ConstrainedProblem, DEFAULT_PENALTY};
use fwsc::engine::{initial_sample, run};
use fwsc::{derive_seed, FwscParams};
use rayon::prelude::*;

use crate::output::{sci, write_csv};

#[derive(Debug, Clone)]
pub struct EngineeringSettings {
    pub problem: String,
    pub seed: u64,
    pub runs: usize,
    pub params: FwscParams<f64>,
    pub penalty: f64,
    pub out: PathBuf,
}

impl EngineeringSettings {
    pub fn new(problem: &str, out: PathBuf) -> Self {
        Self {
            problem: problem.to_string(),
            seed: 42,
            runs: 30,
            params: FwscParams::default(),
            penalty: DEFAULT_PENALTY,
            out,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DesignReport {
    pub problem: &'static str,
    pub variable_names: Vec<&'static str>,
    pub design: Vec<f64>,
    pub cost: f64,
    pub max_violation: f64,
    pub feasible: bool,
    /// Run index and seed that produced the design.
    pub run: usize,
    pub seed: u64,
}

impl DesignReport {
    pub fn render(&self) -> String {
        let mut s = format!("{} (run {}, seed {})\n", self.problem, self.run, self.seed);
        for (name, v) in self.variable_names.iter().zip(&self.design) {
            let _ = writeln!(s, "  {name:>4} = {v:.4}");
        }
        let _ = writeln!(s, "  cost = {:.4}", self.cost);
        let _ = writeln!(s, "  max violation = {:.3e}", self.max_violation);
        let _ = writeln!(s, "  feasible = {}", self.feasible);
        s
    }
}

fn one_run(problem: &ConstrainedProblem<f64>, settings: &EngineeringSettings, seed: u64) -> Result<(Option<(Vec<f64>, f64)>, Vec<f64>)> {
    let (objective, record) = problem.with_feasible_record(settings.penalty)?;
    let outcome = if settings.params.max_iterations == 0 {
        initial_sample(&objective, &settings.params, seed)?
    } else {
        run(&objective, &settings.params, seed)?
    };
    Ok((record.best(), problem.repair(&outcome.best_position)))
}

/// The cheapest feasible design seen across all runs; when no run found one,
/// the least penalized design is reported as infeasible.
pub fn best_design(settings: &EngineeringSettings) -> Result<DesignReport> {
    let problem = by_id::<f64>(&settings.problem)?;
    let seeds: Vec<u64> = (0..settings.runs.max(1))
        .map(|r| derive_seed(settings.seed, &settings.problem, &[r as u64]))
        .collect();
    let results = seeds
        .par_iter()
        .map(|&seed| one_run(&problem, settings, seed))
        .collect::<Result<Vec<_>>>()?;

    let report = |run: usize, design: Vec<f64>| DesignReport {
        problem: problem.name,
        variable_names: problem.variable_names.clone(),
        cost: problem.objective_value(&design),
        max_violation: problem.max_violation(&design),
        feasible: problem.is_feasible(&design),
        design,
        run,
        seed: seeds[run],
    };

    let feasible = results
        .iter()
        .enumerate()
        .filter_map(|(i, (f, _))| f.as_ref().map(|(x, c)| (i, x, *c)))
        .min_by(|a, b| a.2.total_cmp(&b.2).then(a.0.cmp(&b.0)));
    if let Some((i, x, _)) = feasible {
        return Ok(report(i, x.clone()));
    }
    let penalized = |x: &[f64]| problem.penalize(x, settings.penalty).unwrap_or(f64::INFINITY);
    let (i, x) = results
        .iter()
        .enumerate()
        .map(|(i, (_, x))| (i, x))
        .min_by(|a, b| penalized(a.1).total_cmp(&penalized(b.1)).then(a.0.cmp(&b.0)))
        .expect("at least one run");
    Ok(report(i, x.clone()))
}

/// Runs the harness and writes `engineering_<problem>.csv`.
pub fn run_engineering(settings: &EngineeringSettings) -> Result<DesignReport> {
    let report = best_design(settings)?;
    let mut rows: Vec<Vec<String>> = report
        .variable_names
        .iter()
        .zip(&report.design)
        .map(|(n, v)| vec![n.to_string(), sci(*v)])
        .collect();
    rows.push(vec!["cost".into(), sci(report.cost)]);
    rows.push(vec!["max_violation".into(), sci(report.max_violation)]);
    rows.push(vec!["feasible".into(), report.feasible.to_string()]);
    let path = settings.out.join(format!("engineering_{}.csv", settings.problem));
    write_csv(&path, &["quantity", "value"], &rows)?;
    Ok(report)
}
