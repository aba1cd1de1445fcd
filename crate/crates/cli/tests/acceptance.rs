//! Acceptance suite: one line per criterion, each at its stated tolerance and
//! runtime budget. Criteria listed in `KNOWN_SHORTFALLS` are reported as FAIL
//! like any other but do not fail the process; any other failure, or a known
//! shortfall that starts passing, does.

use std::path::Path;
use std::time::{Duration, Instant};

use fwsc::benchmarks::{known_optimum, make_benchmark, optimum_witness, BenchmarkId};
use fwsc::constrained::by_id;
use fwsc::engine::{
    build_mating_grid, initial_sample, mate, neighborhood_width, run, run_observed, select_trees,
    wind_effect, FwscParams, GenerationRecord, NeighborhoodScale, Observer, OffspringPool, Sex,
    Wasp,
};
use fwsc::stats::{
    friedman_mean_ranks, mid_ranks, wilcoxon_signed_rank, PValueMethod, PairedSamples, ResultMatrix,
};
use fwsc::{Bounds, Evaluator, ObjectiveProblem, RandomStream};
use fwsc_cli::bench::{run_suite, RunSettings};
use fwsc_cli::engineering::{best_design, EngineeringSettings};
use fwsc_cli::with_workers;

/// Criteria whose thresholds the algorithm does not reach; see the
/// decisions ledger for the measurements.
const KNOWN_SHORTFALLS: [usize; 2] = [4, 5];

const SEED: u64 = 42;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

// ---------------------------------------------------------------- 1

fn benchmark_fidelity() -> Verdict {
    let mut checked = 0;
    let mut worst = 0.0f64;
    for id in BenchmarkId::ALL {
        for dim in id.allowed_dimensions() {
            if let Some(w) = optimum_witness::<f64>(id, dim).unwrap() {
                let err = (id.value(&w) - known_optimum(id, dim).unwrap()).abs();
                worst = worst.max(err);
                checked += 1;
            }
        }
    }
    verdict(worst <= 1e-9, format!("{checked} witnesses, max |f - f_min| = {worst:.2e} (<= 1e-9)"))
}

// ---------------------------------------------------------------- 2

fn random_wasps(rng: &mut RandomStream, sex: Sex) -> Vec<Wasp<f64>> {
    let n = 1 + rng.index(6);
    (0..n)
        .map(|_| Wasp {
            position: vec![rng.uniform_between(-5.0, 5.0), rng.uniform_between(-5.0, 5.0)],
            fitness: rng.index(5) as f64,
            sex,
        })
        .collect()
}

fn mate_oracle(females: &[Wasp<f64>], males: &[Wasp<f64>]) -> Vec<Vec<f64>> {
    let mut order: Vec<usize> = (0..females.len()).collect();
    order.sort_by(|&a, &b| females[a].fitness.partial_cmp(&females[b].fitness).unwrap().then(a.cmp(&b)));
    let f: Vec<f64> = order.iter().map(|&i| females[i].fitness).collect();
    males
        .iter()
        .map(|m| {
            let n = f.len();
            if n == 1 {
                return females[order[0]].position.clone();
            }
            let r = if m.fitness < f[0] {
                0
            } else {
                (0..n - 1).find(|&r| f[r] <= m.fitness && m.fitness <= f[r + 1]).unwrap_or(n - 2)
            };
            let (p, q) = (&females[order[r]].position, &females[order[r + 1]].position);
            vec![(p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0]
        })
        .collect()
}

fn engine_exactness() -> Verdict {
    let mut rng = RandomStream::new(SEED);
    let mut mismatches = 0;
    for _ in 0..200 {
        let females = random_wasps(&mut rng, Sex::Female);
        let males = random_wasps(&mut rng, Sex::Male);
        let grid = build_mating_grid(females.clone()).unwrap();
        if mate(&grid, &males) != mate_oracle(&females, &males) {
            mismatches += 1;
        }
    }
    let problem = ObjectiveProblem::deterministic("coarse", Bounds::uniform(2, -5.0, 5.0).unwrap(), |x: &[f64]| {
        (x[0].round() + x[1].round()).abs()
    });
    for _ in 0..200 {
        let n = 1 + rng.index(12);
        let members: Vec<Vec<f64>> =
            (0..n).map(|_| vec![rng.uniform_between(-3.0, 3.0), rng.uniform_between(-3.0, 3.0)]).collect();
        let t = 1 + rng.index(n);
        let mut ev = Evaluator::new(&problem, RandomStream::new(0));
        let pool = OffspringPool::new(members.clone()).unwrap();
        let (trees, _) = select_trees(&mut ev, &pool, t, &[0.5, 0.5]).unwrap();
        let f: Vec<f64> = members.iter().map(|x| (x[0].round() + x[1].round()).abs()).collect();
        let mut slot = vec![0; n];
        for i in 0..n {
            let beaten_by = (0..n).filter(|&j| f[j] < f[i] || (f[j] == f[i] && j < i)).count();
            slot[beaten_by] = i;
        }
        let expected: Vec<&Vec<f64>> = slot[..t].iter().map(|&i| &members[i]).collect();
        let got: Vec<&Vec<f64>> = trees.iter().map(|t| &t.position).collect();
        if got != expected {
            mismatches += 1;
        }
    }
    verdict(mismatches == 0, format!("400 instances (200 mate, 200 select), {mismatches} mismatches"))
}

// ---------------------------------------------------------------- 3

fn snapshot(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&p).unwrap())
        })
        .collect();
    files.sort();
    files
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let settings = |name: &str| RunSettings {
        seed: SEED,
        runs: 4,
        problems: vec![(BenchmarkId::F1, 30), (BenchmarkId::F7, 30), (BenchmarkId::F9, 100), (BenchmarkId::F21, 4)],
        params: FwscParams { max_iterations: 40, ..FwscParams::default() },
        trace: true,
        out: dir.path().join(name),
    };
    let serial = settings("serial");
    let parallel = settings("parallel");
    let again = settings("again");
    with_workers(Some(1), || run_suite(&serial)).unwrap().unwrap();
    with_workers(Some(4), || run_suite(&parallel)).unwrap().unwrap();
    with_workers(Some(3), || run_suite(&again)).unwrap().unwrap();
    let (a, b, c) = (snapshot(&serial.out), snapshot(&parallel.out), snapshot(&again.out));
    let same = a == b && b == c;
    verdict(same, format!("{} files per run, serial vs 4 and 3 workers identical: {same}", a.len()))
}

// ---------------------------------------------------------------- 4

fn optimization_quality() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let settings = RunSettings {
        seed: SEED,
        runs: 30,
        problems: vec![(BenchmarkId::F1, 30), (BenchmarkId::F9, 30), (BenchmarkId::F11, 30)],
        params: FwscParams { max_iterations: 500, ..FwscParams::default() },
        trace: false,
        out: dir.path().to_path_buf(),
    };
    let rows = with_workers(None, || run_suite(&settings)).unwrap().unwrap();
    let limits = [1e-8, 1.0, 0.1];
    let mut pass = true;
    let mut parts = Vec::new();
    for (row, limit) in rows.iter().zip(limits) {
        let ok = row.mean <= limit;
        pass &= ok;
        parts.push(format!("{} mean {:.3e} (<= {limit:e}) {}", row.problem, row.mean, if ok { "ok" } else { "over" }));
    }
    verdict(pass, parts.join("; "))
}

// ---------------------------------------------------------------- 5

fn scalability() -> Verdict {
    let problem = make_benchmark::<f64>(BenchmarkId::F1, 1000).unwrap();
    let params = FwscParams { max_iterations: 100, ..FwscParams::default() };
    let start = initial_sample(&problem, &params, SEED).unwrap().best_fitness;
    let result = run(&problem, &params, SEED).unwrap();
    let finite = result.trace.iter().all(|v| v.is_finite());
    let orders = (start / result.best_fitness).log10();
    verdict(
        finite && result.iterations_run == 100 && orders >= 10.0,
        format!(
            "100 generations, finite trace: {finite}, initial {start:.3e} -> {:.3e}, {orders:.2} orders (>= 10)",
            result.best_fitness
        ),
    )
}

// ---------------------------------------------------------------- 6

fn constrained_reproduction() -> Verdict {
    let cited: [(&str, &[f64], f64); 3] = [
        ("pressure-vessel", &[0.8125, 0.4375, 42.0912, 176.7465], 6061.0777),
        ("stepped-beam", &[3.0, 60.0, 3.1, 55.0, 2.6, 50.0, 2.2046, 44.0915, 1.7497, 34.9951], 63893.4544),
        ("welded-beam", &[0.2023, 3.5442, 9.0482, 0.2057], 1.7280),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (id, x, cost) in cited {
        let got = by_id::<f64>(id).unwrap().objective_value(x);
        let rel = (got - cost).abs() / cost;
        pass &= rel <= 5e-3;
        parts.push(format!("{id} {got:.4} vs {cost} ({:.3}%)", rel * 100.0));
    }
    let dir = tempfile::tempdir().unwrap();
    let mut s = EngineeringSettings::new("pressure-vessel", dir.path().to_path_buf());
    s.seed = SEED;
    let report = with_workers(None, || best_design(&s)).unwrap().unwrap();
    let ok = report.feasible && report.cost <= 6500.0;
    pass &= ok;
    parts.push(format!("harness vessel best feasible {:.4} (<= 6500, feasible {})", report.cost, report.feasible));
    verdict(pass, parts.join("; "))
}

// ---------------------------------------------------------------- 7

fn enumeration_p(ranks: &[f64], t_plus: f64) -> f64 {
    let n = ranks.len();
    let (mut low, mut high) = (0u64, 0u64);
    for mask in 0u64..(1 << n) {
        let t: f64 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| ranks[i]).sum();
        low += (t <= t_plus + 1e-9) as u64;
        high += (t >= t_plus - 1e-9) as u64;
    }
    (2.0 * low.min(high) as f64 / (1u64 << n) as f64).min(1.0)
}

fn permutation_mean_ranks(rows: &[Vec<f64>]) -> Vec<f64> {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        perms(k - 1)
            .into_iter()
            .flat_map(|p| (0..=p.len()).map(move |s| {
                let mut q = p.clone();
                q.insert(s, k - 1);
                q
            }))
            .collect()
    }
    let k = rows[0].len();
    let all = perms(k);
    let mut totals = vec![0.0; k];
    for row in rows {
        let sorting: Vec<&Vec<usize>> = all.iter().filter(|p| p.windows(2).all(|w| row[w[0]] <= row[w[1]])).collect();
        // integer position sums keep the per-row average exact
        let mut positions = vec![0usize; k];
        for p in &sorting {
            for (pos, &col) in p.iter().enumerate() {
                positions[col] += pos + 1;
            }
        }
        for (t, s) in totals.iter_mut().zip(positions) {
            *t += s as f64 / sorting.len() as f64;
        }
    }
    totals.iter().map(|t| t / rows.len() as f64).collect()
}

fn statistics_oracles() -> Verdict {
    let mut rng = RandomStream::new(SEED);
    let (mut fixtures, mut worst_p, mut identity_breaks) = (0, 0.0f64, 0);
    for n in 2..=13 {
        for ties in [false, true] {
            for _ in 0..4 {
                let d: Vec<f64> = (0..n)
                    .map(|_| {
                        let sign = if rng.uniform::<f64>() < 0.5 { -1.0 } else { 1.0 };
                        let mag = if ties { (1 + rng.index(4)) as f64 } else { rng.uniform_between(0.01, 9.0) };
                        sign * mag
                    })
                    .collect();
                let r = wilcoxon_signed_rank(&PairedSamples::from_differences(d.clone()).unwrap()).unwrap();
                let ranks = mid_ranks(&d.iter().map(|v| v.abs()).collect::<Vec<_>>());
                assert_eq!(r.method, PValueMethod::Exact);
                worst_p = worst_p.max((r.p_value - enumeration_p(&ranks, r.t_plus)).abs());
                let m = n as f64;
                identity_breaks += (r.t_plus + r.t_minus != m * (m + 1.0) / 2.0) as usize;
                fixtures += 1;
            }
        }
    }
    let mut rank_mismatches = 0;
    for _ in 0..50 {
        let rows: Vec<Vec<f64>> = (0..5).map(|_| (0..5).map(|_| rng.index(4) as f64).collect()).collect();
        let got = friedman_mean_ranks(&ResultMatrix::from_rows(rows.clone()).unwrap()).mean_ranks;
        if got != permutation_mean_ranks(&rows) {
            rank_mismatches += 1;
        }
    }
    verdict(
        worst_p <= 1e-12 && identity_breaks == 0 && rank_mismatches == 0,
        format!(
            "{fixtures} wilcoxon fixtures, max |p - p_enum| = {worst_p:.1e}, T+ + T- breaks {identity_breaks}; 50 friedman 5x5, {rank_mismatches} mismatches"
        ),
    )
}

// ---------------------------------------------------------------- 8

#[derive(Default)]
struct Log {
    records: Vec<(f64, usize, usize, usize, usize)>,
}

impl Observer<f64> for Log {
    fn generation(&mut self, r: &GenerationRecord<'_, f64>) {
        self.records.push((r.eta, r.trees.len(), r.figs, r.wasps, r.pool_size));
    }
}

fn structural_invariants() -> Verdict {
    let mut rng = RandomStream::new(SEED);
    let mut broken = Vec::new();
    for case in 0..100 {
        let t = 1 + rng.index(5);
        let a = 1 + rng.index(4);
        let w = 2 * (1 + rng.index(5));
        let dim = 1 + rng.index(6);
        let params = FwscParams {
            num_trees: t,
            figs_per_tree: a,
            wasps_per_fig: w,
            eta0: rng.uniform_between(0.05, 2.0),
            wind_threshold: rng.uniform(),
            wind_fraction: rng.uniform(),
            max_iterations: 1 + rng.index(8),
            neighborhood_scale: if rng.index(2) == 0 { NeighborhoodScale::Absolute } else { NeighborhoodScale::RangeRelative },
            ..FwscParams::default()
        };
        let lo = rng.uniform_between(-50.0, 0.0);
        let bounds = Bounds::uniform(dim, lo, lo + rng.uniform_between(0.5, 100.0)).unwrap();
        let guard = bounds.clone();
        let outside = std::sync::Arc::new(std::sync::atomic::AtomicUsize::new(0));
        let seen = outside.clone();
        let problem = ObjectiveProblem::deterministic("probe", bounds, move |x: &[f64]| {
            if !guard.contains(x) {
                seen.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            }
            x.iter().map(|v| v * v + (2.0 * v).sin()).sum()
        });
        let mut log = Log::default();
        let r = run_observed(&problem, &params, rng.next_u64(), &mut log).unwrap();
        let cards = log.records.iter().all(|&(_, tr, f, ws, p)| tr == t && f == t * a && ws == t * a * w && p == t * a * w / 2);
        let eta = log.records.windows(2).all(|p| p[1].0 < p[0].0)
            && (1..=params.max_iterations + 1).collect::<Vec<_>>().windows(2).all(|k| {
                neighborhood_width(k[1], &params) < neighborhood_width(k[0], &params)
            });
        let trace = r.trace.windows(2).all(|p| p[1] <= p[0]);
        let contained = outside.load(std::sync::atomic::Ordering::Relaxed) == 0;

        let n = 1 + rng.index(50);
        let members: Vec<Vec<f64>> = (0..n).map(|_| (0..dim).map(|_| rng.uniform_between(-1.0, 1.0)).collect()).collect();
        let pool = OffspringPool::new(members.clone()).unwrap();
        let global = Bounds::uniform(dim, -10.0, 10.0).unwrap();
        let calm = FwscParams { wind_threshold: 0.0, ..params.clone() };
        let (same, none) = wind_effect(&mut rng, pool.clone(), &calm, &global);
        let gust = FwscParams { wind_threshold: 1.0, ..params.clone() };
        let (_, moved) = wind_effect(&mut rng, pool.clone(), &gust, &global);
        let wind = same == pool && none.is_empty() && moved.len() == (params.wind_fraction * n as f64).ceil() as usize;

        for (name, ok) in [("cardinality", cards), ("eta", eta), ("trace", trace), ("bounds", contained), ("wind", wind)] {
            if !ok {
                broken.push(format!("case {case}: {name}"));
            }
        }
    }
    verdict(broken.is_empty(), if broken.is_empty() { "100 random configs, all invariants hold".into() } else { broken.join(", ") })
}

fn main() {
    let criteria: [(usize, &str, Duration, fn() -> Verdict); 8] = [
        (1, "benchmark fidelity", Duration::from_secs(1), benchmark_fidelity),
        (2, "engine exactness on micro-instances", Duration::from_secs(5), engine_exactness),
        (3, "determinism serial vs parallel", Duration::from_secs(60), determinism),
        (4, "desk-scale optimization quality", Duration::from_secs(600), optimization_quality),
        (5, "scalability smoke test", Duration::from_secs(300), scalability),
        (6, "constrained reproduction", Duration::from_secs(300), constrained_reproduction),
        (7, "statistics oracle equivalence", Duration::from_secs(30), statistics_oracles),
        (8, "structural invariants", Duration::from_secs(60), structural_invariants),
    ];
    let mut unexpected = Vec::new();
    for (n, name, budget, check) in criteria {
        let clock = Instant::now();
        let v = check();
        let elapsed = clock.elapsed();
        let in_time = elapsed <= budget;
        let pass = v.pass && in_time;
        println!(
            "criterion {n} {}: {name}: {} [{:.2?} of {:?}]",
            if pass { "PASS" } else { "FAIL" },
            v.detail,
            elapsed,
            budget
        );
        let known = KNOWN_SHORTFALLS.contains(&n);
        if pass == known {
            unexpected.push(n);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: outcomes as recorded (known shortfalls: criteria {KNOWN_SHORTFALLS:?})");
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
