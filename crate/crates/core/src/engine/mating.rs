//! Best-fit mating: males bracket their fitness between two consecutive
//! females and the pair's midpoint becomes the offspring.

use super::Wasp;
use crate::scalar::fitness_cmp;
use crate::{Error, Result, Scalar};

/// Females sorted ascending by fitness (stable on ties).
#[derive(Debug, Clone, PartialEq)]
pub struct MatingGrid<S> {
    females: Vec<Wasp<S>>,
}

pub fn build_mating_grid<S: Scalar>(mut females: Vec<Wasp<S>>) -> Result<MatingGrid<S>> {
    if females.is_empty() {
        return Err(Error::InvalidInput("mating grid needs at least one female".into()));
    }
    females.sort_by(|a, b| fitness_cmp(a.fitness, b.fitness));
    Ok(MatingGrid { females })
}

impl<S: Scalar> MatingGrid<S> {
    pub fn females(&self) -> &[Wasp<S>] {
        &self.females
    }

    /// The closed fitness intervals between consecutive females. A single
    /// female yields one degenerate interval.
    pub fn intervals(&self) -> Vec<(S, S)> {
        if self.females.len() == 1 {
            let f = self.females[0].fitness;
            return vec![(f, f)];
        }
        self.females
            .windows(2)
            .map(|pair| (pair[0].fitness, pair[1].fitness))
            .collect()
    }

    /// Index `r` of the interval `[f_r, f_{r+1}]` a male of fitness `fitness`
    /// mates in: the first one containing it, or the nearest boundary
    /// interval when it lies outside the grid.
    pub fn bracket(&self, fitness: S) -> usize {
        let n = self.females.len();
        if n == 1 {
            return 0;
        }
        let first_not_below = self
            .females
            .partition_point(|w| fitness_cmp(w.fitness, fitness).is_lt());
        first_not_below.saturating_sub(1).min(n - 2)
    }
}

fn midpoint<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let two = S::one() + S::one();
    a.iter().zip(b).map(|(&x, &y)| (x + y) / two).collect()
}

/// One offspring per male, in male order.
pub fn mate<S: Scalar>(grid: &MatingGrid<S>, males: &[Wasp<S>]) -> Vec<Vec<S>> {
    let females = &grid.females;
    males
        .iter()
        .map(|male| {
            if females.len() == 1 {
                return females[0].position.clone();
            }
            let r = grid.bracket(male.fitness);
            midpoint(&females[r].position, &females[r + 1].position)
        })
        .collect()
}
