use super::{
    build_mating_grid, mate, neighborhood_radii, neighborhood_width, pool_offsprings, search_directions, select_trees,
    spawn_figs, spawn_trees, spawn_wasps, wind_effect, FwscParams, Sex, Tree,
};
use crate::problem::Evaluator;
use crate::random::RandomStream;
use crate::{ObjectiveProblem, Result, Scalar};

const ALGORITHM_STREAM: u64 = 0;
const NOISE_STREAM: u64 = 1;

/// Outcome of one optimization run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult<S> {
    pub best_position: Vec<S>,
    pub best_fitness: S,
    /// Best-so-far fitness after each generation.
    pub trace: Vec<S>,
    pub evaluations: u64,
    pub seed: u64,
    pub iterations_run: usize,
}

/// Per-generation hook for instrumentation.
pub trait Observer<S> {
    fn generation(&mut self, _record: &GenerationRecord<'_, S>) {}
}

impl<S> Observer<S> for () {}

/// Snapshot handed to an [`Observer`] after each generation.
#[derive(Debug)]
pub struct GenerationRecord<'a, S> {
    pub iteration: usize,
    pub eta: S,
    pub trees: &'a [Tree<S>],
    pub figs: usize,
    pub wasps: usize,
    pub pool_size: usize,
    pub wind_moved: usize,
    pub evaluations: u64,
    pub best_so_far: S,
}

/// Runs the search until the iteration budget is spent or the optional
/// stagnation window elapses without improvement.
pub fn run<S: Scalar>(
    problem: &ObjectiveProblem<S>,
    params: &FwscParams<S>,
    seed: u64,
) -> Result<RunResult<S>> {
    run_observed(problem, params, seed, &mut ())
}

pub fn run_observed<S: Scalar>(
    problem: &ObjectiveProblem<S>,
    params: &FwscParams<S>,
    seed: u64,
    observer: &mut impl Observer<S>,
) -> Result<RunResult<S>> {
    params.validate()?;
    let root = RandomStream::new(seed);
    let mut rng = root.split(ALGORITHM_STREAM);
    let mut evaluator = Evaluator::new(problem, root.split(NOISE_STREAM));
    let global = problem.bounds();

    let mut k = 1;
    let mut eta = neighborhood_width(k, params);
    let mut trees = spawn_trees(&mut rng, problem, params, eta);

    let mut trace: Vec<S> = Vec::with_capacity(params.max_iterations);
    let mut stale = 0usize;

    for iteration in 0..params.max_iterations {
        let mut per_fig = Vec::with_capacity(params.num_trees * params.figs_per_tree);
        let mut fig_count = 0;
        let mut wasp_count = 0;
        for tree in &trees {
            for fig in spawn_figs(&mut rng, tree, params, eta, global) {
                let wasps = spawn_wasps(&mut rng, &mut evaluator, &fig, params)?;
                fig_count += 1;
                wasp_count += wasps.len();
                let (females, males): (Vec<_>, Vec<_>) =
                    wasps.into_iter().partition(|w| w.sex == Sex::Female);
                let grid = build_mating_grid(females)?;
                per_fig.push(mate(&grid, &males));
            }
        }

        let pool = pool_offsprings(per_fig)?;
        let pool = search_directions(&mut rng, pool, global);
        let (pool, moved) = wind_effect(&mut rng, pool, params, global);

        k += 1;
        eta = neighborhood_width(k, params);
        let radii = neighborhood_radii(eta, global, params.neighborhood_scale);
        let (next, _) = select_trees(&mut evaluator, &pool, params.num_trees, &radii)?;
        trees = next;

        let best = evaluator.best().map(|(_, f)| f).unwrap_or(S::infinity());
        if trace.last().is_some_and(|&prev| !(best < prev)) {
            stale += 1;
        } else {
            stale = 0;
        }
        trace.push(best);

        observer.generation(&GenerationRecord {
            iteration,
            eta,
            trees: &trees,
            figs: fig_count,
            wasps: wasp_count,
            pool_size: pool.len(),
            wind_moved: moved.len(),
            evaluations: evaluator.evaluations(),
            best_so_far: best,
        });

        if params.stagnation_window.is_some_and(|w| stale >= w) {
            break;
        }
    }

    let evaluations = evaluator.evaluations();
    let (best_position, best_fitness) = evaluator
        .into_best()
        .expect("at least one generation evaluates wasps");
    Ok(RunResult {
        best_position,
        best_fitness,
        iterations_run: trace.len(),
        trace,
        evaluations,
        seed,
    })
}

/// Zero-budget fallback: scatters the initial forest, evaluates each tree once
/// and reports the best. The trace holds that single value.
pub fn initial_sample<S: Scalar>(
    problem: &ObjectiveProblem<S>,
    params: &FwscParams<S>,
    seed: u64,
) -> Result<RunResult<S>> {
    let probe = FwscParams {
        max_iterations: params.max_iterations.max(1),
        ..params.clone()
    };
    probe.validate()?;
    let root = RandomStream::new(seed);
    let mut rng = root.split(ALGORITHM_STREAM);
    let mut evaluator = Evaluator::new(problem, root.split(NOISE_STREAM));
    let eta = neighborhood_width(1, &probe);
    for tree in spawn_trees(&mut rng, problem, &probe, eta) {
        evaluator.evaluate(&tree.position)?;
    }
    let evaluations = evaluator.evaluations();
    let (best_position, best_fitness) = evaluator.into_best().expect("num_trees >= 1");
    Ok(RunResult {
        best_position,
        best_fitness,
        trace: vec![best_fitness],
        evaluations,
        seed,
        iterations_run: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Bounds;

    fn sphere(n: usize, half: f64) -> ObjectiveProblem<f64> {
        ObjectiveProblem::deterministic(
            "sphere",
            Bounds::uniform(n, -half, half).unwrap(),
            |x: &[f64]| x.iter().map(|v| v * v).sum(),
        )
    }

    #[test]
    fn single_generation_budget() {
        let params = FwscParams { max_iterations: 1, ..Default::default() };
        let r = run(&sphere(4, 10.0), &params, 1).unwrap();
        assert_eq!(r.trace.len(), 1);
        assert_eq!(r.iterations_run, 1);
        assert_eq!(r.evaluations, 3 * 4 * 8 + 48);
        assert_eq!(r.best_fitness, r.trace[0]);
    }

    #[test]
    fn same_seed_same_result() {
        let params = FwscParams { max_iterations: 30, ..Default::default() };
        let p = sphere(5, 100.0);
        assert_eq!(run(&p, &params, 77).unwrap(), run(&p, &params, 77).unwrap());
        assert_ne!(run(&p, &params, 77).unwrap(), run(&p, &params, 78).unwrap());
    }

    #[test]
    fn sphere_two_dims_converges() {
        let params = FwscParams::default();
        let r = run(&sphere(2, 100.0), &params, 5).unwrap();
        assert!(r.best_fitness <= 1e-6, "best {}", r.best_fitness);
        assert!(r.trace.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn stagnation_stops_early() {
        let flat = ObjectiveProblem::deterministic(
            "flat",
            Bounds::uniform(3, -1.0, 1.0).unwrap(),
            |_: &[f64]| 1.0,
        );
        let params = FwscParams { stagnation_window: Some(5), ..Default::default() };
        let r = run(&flat, &params, 3).unwrap();
        assert_eq!(r.iterations_run, 6);
    }

    #[test]
    fn initial_sample_evaluates_trees_only() {
        let r = initial_sample(&sphere(3, 10.0), &FwscParams::default(), 9).unwrap();
        assert_eq!(r.evaluations, 3);
        assert_eq!(r.iterations_run, 0);
        assert_eq!(r.trace, vec![r.best_fitness]);
    }

    #[test]
    fn runs_in_single_precision() {
        let p = ObjectiveProblem::<f32>::deterministic(
            "sphere32",
            Bounds::uniform(3, -10.0, 10.0).unwrap(),
            |x: &[f32]| x.iter().map(|v| v * v).sum(),
        );
        let params = FwscParams { max_iterations: 100, ..Default::default() };
        let r = run(&p, &params, 2).unwrap();
        assert!(r.best_fitness < 1e-3);
    }
}
