use crate::{Bounds, Error, Result, Scalar};

/// How the scalar neighborhood width maps to a per-coordinate radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NeighborhoodScale {
    /// Radius equals the width in problem units, the same in every coordinate.
    Absolute,
    /// Radius is the width times half the coordinate's range.
    #[default]
    RangeRelative,
}

/// Control parameters of the coevolutionary search.
#[derive(Debug, Clone, PartialEq)]
pub struct FwscParams<S> {
    /// Number of fig trees kept between generations.
    pub num_trees: usize,
    pub figs_per_tree: usize,
    /// Wasps per fig; half become females, half males. Must be even.
    pub wasps_per_fig: usize,
    /// Neighborhood constant scaling the local search radius.
    pub eta0: S,
    /// Probability that the wind perturbs part of the offspring pool.
    pub wind_threshold: S,
    /// Decay constant `K` of the neighborhood width. `None` means
    /// `max_iterations / 20`.
    pub decay: Option<S>,
    pub neighborhood_scale: NeighborhoodScale,
    pub max_iterations: usize,
    /// Fraction of the offspring pool moved by a wind event.
    pub wind_fraction: S,
    /// Stop early once the best fitness has not improved for this many
    /// consecutive generations.
    pub stagnation_window: Option<usize>,
}

impl<S: Scalar> Default for FwscParams<S> {
    fn default() -> Self {
        Self {
            num_trees: 3,
            figs_per_tree: 4,
            wasps_per_fig: 8,
            eta0: S::lit(0.8),
            wind_threshold: S::lit(0.5),
            decay: None,
            neighborhood_scale: NeighborhoodScale::default(),
            max_iterations: 500,
            wind_fraction: S::lit(0.1),
            stagnation_window: None,
        }
    }
}

impl<S: Scalar> FwscParams<S> {
    /// The neighborhood decay constant `K`.
    pub fn decay_constant(&self) -> S {
        self.decay
            .unwrap_or_else(|| S::lit(self.max_iterations.max(1) as f64 / 20.0))
    }

    pub fn females_per_fig(&self) -> usize {
        self.wasps_per_fig / 2
    }

    /// Offspring produced per generation: one per male wasp.
    pub fn pool_size(&self) -> usize {
        self.num_trees * self.figs_per_tree * self.females_per_fig()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |field, reason: &str| {
            Err(Error::InvalidParams {
                field,
                reason: reason.to_string(),
            })
        };
        if self.num_trees == 0 {
            return bad("num_trees", "must be positive");
        }
        if self.figs_per_tree == 0 {
            return bad("figs_per_tree", "must be positive");
        }
        if self.wasps_per_fig < 2 || self.wasps_per_fig % 2 != 0 {
            return bad("wasps_per_fig", "must be an even number of at least 2");
        }
        if !(self.eta0 > S::zero()) || !self.eta0.is_finite() {
            return bad("eta0", "must be positive and finite");
        }
        if !(S::zero() <= self.wind_threshold && self.wind_threshold <= S::one()) {
            return bad("wind_threshold", "must lie in [0, 1]");
        }
        if !(S::zero() <= self.wind_fraction && self.wind_fraction <= S::one()) {
            return bad("wind_fraction", "must lie in [0, 1]");
        }
        let k = self.decay_constant();
        if !(k > S::zero()) || !k.is_finite() {
            return bad("decay", "must be positive and finite");
        }
        if self.max_iterations == 0 {
            return bad("max_iterations", "must be positive");
        }
        if self.stagnation_window == Some(0) {
            return bad("stagnation_window", "must be positive when set");
        }
        Ok(())
    }
}

/// Per-coordinate neighborhood radius for width `eta`.
pub fn neighborhood_radii<S: Scalar>(eta: S, global: &Bounds<S>, scale: NeighborhoodScale) -> Vec<S> {
    let two = S::one() + S::one();
    global
        .lower()
        .iter()
        .zip(global.upper())
        .map(|(&lo, &hi)| match scale {
            NeighborhoodScale::Absolute => eta,
            NeighborhoodScale::RangeRelative => eta * (hi - lo) / two,
        })
        .collect()
}

/// Neighborhood width `eta0 * exp(1 - k / K)` at generation `k`.
pub fn neighborhood_width<S: Scalar>(k: usize, params: &FwscParams<S>) -> S {
    let ratio = S::lit(k as f64) / params.decay_constant();
    params.eta0 * (S::one() - ratio).exp()
}
