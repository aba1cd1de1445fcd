//! The fig tree-wasp coevolutionary search.
//!
//! One generation:
//!
//! 1. every tree drops `figs_per_tree` figs in its neighborhood and every fig
//!    hatches `wasps_per_fig` evaluated wasps, half female and half male;
//! 2. per fig, each male brackets its fitness between two consecutive
//!    females and the pair's midpoint becomes an offspring;
//! 3. all offspring are pooled and resampled inside the pool envelope;
//! 4. the wind may push a fraction of the pool outwards;
//! 5. the best `num_trees` offspring become the next trees and the
//!    neighborhood radius shrinks.

mod mating;
mod params;
mod pool;
mod population;
mod run;

pub use mating::{build_mating_grid, mate, MatingGrid};
pub use params::{neighborhood_radii, neighborhood_width, FwscParams, NeighborhoodScale};
pub use pool::{
    pool_offsprings, rank_indices, search_directions, select_trees, wind_effect, OffspringPool,
};
pub use population::{spawn_figs, spawn_trees, spawn_wasps, Fig, Sex, Tree, Wasp};
pub use run::{initial_sample, run, run_observed, GenerationRecord, Observer, RunResult};
