//! Trees, figs and wasps: generation of the nested population.

use super::{neighborhood_radii, FwscParams};
use crate::problem::{clamp_in_place, Evaluator, ObjectiveProblem, Region};
use crate::random::{uniform_in_box, RandomStream};
use crate::{Bounds, Result, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct Tree<S> {
    pub position: Vec<S>,
    pub local_bounds: Region<S>,
}

impl<S: Scalar> Tree<S> {
    /// Tree at `position` whose neighborhood has per-coordinate `radii`.
    pub fn new(position: Vec<S>, radii: &[S], global: &Bounds<S>) -> Self {
        let local_bounds = Region::around_radii(&position, radii, global);
        Self {
            position,
            local_bounds,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sex {
    Female,
    Male,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Wasp<S> {
    pub position: Vec<S>,
    pub fitness: S,
    pub sex: Sex,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig<S> {
    pub position: Vec<S>,
    pub local_bounds: Region<S>,
    /// Filled by [`spawn_wasps`].
    pub wasps: Vec<Wasp<S>>,
}

fn jitter<S: Scalar>(rng: &mut RandomStream, position: &mut [S], radii: &[S], global: &Bounds<S>) {
    for (x, &r) in position.iter_mut().zip(radii) {
        *x = *x + rng.uniform_between(-r, r);
    }
    clamp_in_place(position, global);
}

/// Scatters `num_trees` trees uniformly over the global box, each jittered by
/// up to the neighborhood radius per coordinate.
pub fn spawn_trees<S: Scalar>(
    rng: &mut RandomStream,
    problem: &ObjectiveProblem<S>,
    params: &FwscParams<S>,
    eta: S,
) -> Vec<Tree<S>> {
    let global = problem.bounds();
    let radii = neighborhood_radii(eta, global, params.neighborhood_scale);
    (0..params.num_trees)
        .map(|_| {
            let mut position = uniform_in_box(rng, global.lower(), global.upper());
            jitter(rng, &mut position, &radii, global);
            Tree::new(position, &radii, global)
        })
        .collect()
}

/// Places `figs_per_tree` figs inside the tree's neighborhood, jittered by up to
/// the neighborhood radius and clamped to the global box.
pub fn spawn_figs<S: Scalar>(
    rng: &mut RandomStream,
    tree: &Tree<S>,
    params: &FwscParams<S>,
    eta: S,
    global: &Bounds<S>,
) -> Vec<Fig<S>> {
    let radii = neighborhood_radii(eta, global, params.neighborhood_scale);
    (0..params.figs_per_tree)
        .map(|_| {
            let mut position =
                uniform_in_box(rng, &tree.local_bounds.lower, &tree.local_bounds.upper);
            jitter(rng, &mut position, &radii, global);
            let local_bounds = Region::around_radii(&position, &radii, global);
            Fig {
                position,
                local_bounds,
                wasps: Vec::new(),
            }
        })
        .collect()
}

/// Hatches `wasps_per_fig` wasps uniformly in the fig's neighborhood, evaluates
/// them and splits them into equal female and male halves at random.
pub fn spawn_wasps<S: Scalar>(
    rng: &mut RandomStream,
    evaluator: &mut Evaluator<'_, S>,
    fig: &Fig<S>,
    params: &FwscParams<S>,
) -> Result<Vec<Wasp<S>>> {
    let count = params.wasps_per_fig;
    let mut wasps = Vec::with_capacity(count);
    for _ in 0..count {
        let position = uniform_in_box(rng, &fig.local_bounds.lower, &fig.local_bounds.upper);
        let fitness = evaluator.evaluate(&position)?;
        wasps.push(Wasp {
            position,
            fitness,
            sex: Sex::Male,
        });
    }
    let mut order: Vec<usize> = (0..count).collect();
    rng.shuffle(&mut order);
    for &i in &order[..count / 2] {
        wasps[i].sex = Sex::Female;
    }
    Ok(wasps)
}
