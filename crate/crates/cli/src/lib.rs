//! Experiment harness around the `fwsc` optimizer: seeded benchmark runs,
//! engineering design reports and rank-based comparisons, all written as CSV.

pub mod bench;
pub mod compare;
pub mod config;
pub mod engineering;
pub mod output;

use std::fmt::Write as _;

use anyhow::{Context, Result};
use fwsc::benchmarks::{BenchmarkId, Dimensions, KnownMinimum};
use fwsc::constrained::PROBLEM_IDS;

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "FWSC_WORKERS";

pub fn workers_from_env() -> Result<Option<usize>> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => {
            let n: usize = v.trim().parse().with_context(|| format!("{WORKERS_ENV}={v:?}"))?;
            Ok(Some(n.max(1)))
        }
        Err(_) => Ok(None),
    }
}

/// Runs `f` on a dedicated pool of `workers` threads (rayon's default when
/// `None`).
pub fn with_workers<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers {
        builder = builder.num_threads(n);
    }
    Ok(builder.build()?.install(f))
}

/// Human-readable table of every problem id.
pub fn list_problems() -> String {
    let mut s = String::from("id   name                     range                 dimensions       minimum\n");
    for id in BenchmarkId::ALL {
        let spec = id.spec();
        let dims = match spec.dimensions {
            Dimensions::Scalable => "30,100,500,1000".to_string(),
            Dimensions::Fixed(n) => n.to_string(),
        };
        let min = match spec.f_min {
            KnownMinimum::Constant(v) => v.to_string(),
            KnownMinimum::PerDimension(v) => format!("{v} * n"),
        };
        let range = format!("[{}, {}]", spec.range.0, spec.range.1);
        let _ = writeln!(s, "{:<4} {:<24} {:<21} {:<16} {}", id.to_string(), spec.name, range, dims, min);
    }
    for id in PROBLEM_IDS {
        let _ = writeln!(s, "{id}");
    }
    s
}
