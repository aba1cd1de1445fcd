//! Rank-based comparison of optimizers: Wilcoxon signed-rank and Friedman.

mod friedman;
mod ranks;
mod wilcoxon;

pub use friedman::{
    friedman_mean_ranks, friedman_statistic, FriedmanRanks, FriedmanTest, ResultMatrix,
};
pub use ranks::{dense_ordinals, mid_ranks};
pub use wilcoxon::{
    pairwise_against, wilcoxon_signed_rank, PairedSamples, PairwiseComparison, PValueMethod,
    WilcoxonResult, EXACT_LIMIT, SIGNIFICANCE,
};
