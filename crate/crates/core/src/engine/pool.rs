//! The generation-wide offspring pool: search directions, wind and selection.

use super::{FwscParams, Tree};
use crate::problem::{clamp_in_place, Evaluator};
use crate::random::RandomStream;
use crate::scalar::fitness_cmp;
use crate::{Bounds, Error, Result, Scalar};

/// All offspring of one generation with their per-dimension envelope.
#[derive(Debug, Clone, PartialEq)]
pub struct OffspringPool<S> {
    offspring: Vec<Vec<S>>,
    envelope_min: Vec<S>,
    envelope_max: Vec<S>,
}

impl<S: Scalar> OffspringPool<S> {
    pub fn new(offspring: Vec<Vec<S>>) -> Result<Self> {
        let dimension = match offspring.first() {
            Some(first) => first.len(),
            None => return Err(Error::InvalidInput("offspring pool is empty".into())),
        };
        if let Some(bad) = offspring.iter().find(|o| o.len() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: bad.len(),
            });
        }
        let mut pool = Self {
            offspring,
            envelope_min: Vec::new(),
            envelope_max: Vec::new(),
        };
        pool.recompute_envelope();
        Ok(pool)
    }

    fn recompute_envelope(&mut self) {
        let dimension = self.offspring[0].len();
        let mut lo = vec![S::infinity(); dimension];
        let mut hi = vec![S::neg_infinity(); dimension];
        for member in &self.offspring {
            for (i, &x) in member.iter().enumerate() {
                lo[i] = lo[i].min(x);
                hi[i] = hi[i].max(x);
            }
        }
        self.envelope_min = lo;
        self.envelope_max = hi;
    }

    pub fn len(&self) -> usize {
        self.offspring.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offspring.is_empty()
    }

    pub fn members(&self) -> &[Vec<S>] {
        &self.offspring
    }

    pub fn envelope_min(&self) -> &[S] {
        &self.envelope_min
    }

    pub fn envelope_max(&self) -> &[S] {
        &self.envelope_max
    }
}

/// Flattens per-fig offspring lists into one pool.
pub fn pool_offsprings<S: Scalar>(
    per_fig: impl IntoIterator<Item = Vec<Vec<S>>>,
) -> Result<OffspringPool<S>> {
    OffspringPool::new(per_fig.into_iter().flatten().collect())
}

/// Resamples every offspring coordinate uniformly within the pool envelope.
pub fn search_directions<S: Scalar>(
    rng: &mut RandomStream,
    mut pool: OffspringPool<S>,
    global: &Bounds<S>,
) -> OffspringPool<S> {
    let (lo, hi) = (pool.envelope_min.clone(), pool.envelope_max.clone());
    for member in pool.offspring.iter_mut() {
        for (i, x) in member.iter_mut().enumerate() {
            *x = rng.uniform_between(lo[i], hi[i]);
        }
        clamp_in_place(member, global);
    }
    pool.recompute_envelope();
    pool
}

/// With probability `wind_threshold`, pushes `ceil(wind_fraction * |pool|)`
/// distinct offspring by `x += x * U(0,1)` per coordinate. Returns the
/// perturbed pool and the indices that moved.
pub fn wind_effect<S: Scalar>(
    rng: &mut RandomStream,
    mut pool: OffspringPool<S>,
    params: &FwscParams<S>,
    global: &Bounds<S>,
) -> (OffspringPool<S>, Vec<usize>) {
    let gate: S = rng.uniform();
    // strict so that a zero threshold never fires
    if !(gate < params.wind_threshold) {
        return (pool, Vec::new());
    }
    let len = pool.len();
    let wanted = (params.wind_fraction * S::lit(len as f64)).ceil();
    let count = wanted.to_usize().unwrap_or(len).min(len);
    let chosen = rng.sample_indices(len, count);
    for &idx in &chosen {
        let member = &mut pool.offspring[idx];
        for x in member.iter_mut() {
            let r: S = rng.uniform();
            *x = *x + *x * r;
        }
        clamp_in_place(member, global);
    }
    pool.recompute_envelope();
    (pool, chosen)
}

/// Evaluates the pool and promotes the `num_trees` fittest members (ties by
/// pool index) to trees with neighborhood `radii`. Returns the trees and
/// every member's fitness.
pub fn select_trees<S: Scalar>(
    evaluator: &mut Evaluator<'_, S>,
    pool: &OffspringPool<S>,
    num_trees: usize,
    radii: &[S],
) -> Result<(Vec<Tree<S>>, Vec<S>)> {
    if pool.len() < num_trees {
        return Err(Error::InvalidInput(format!(
            "pool of {} cannot supply {num_trees} trees",
            pool.len()
        )));
    }
    let fitness = pool
        .members()
        .iter()
        .map(|m| evaluator.evaluate(m))
        .collect::<Result<Vec<S>>>()?;
    let order = rank_indices(&fitness);
    let global = evaluator.problem().bounds();
    let trees = order[..num_trees]
        .iter()
        .map(|&i| Tree::new(pool.members()[i].clone(), radii, global))
        .collect();
    Ok((trees, fitness))
}

/// Indices sorted ascending by fitness, ties by index.
pub fn rank_indices<S: Scalar>(fitness: &[S]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..fitness.len()).collect();
    order.sort_by(|&a, &b| fitness_cmp(fitness[a], fitness[b]));
    order
}
