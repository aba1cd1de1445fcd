//! Fig tree-wasp symbiotic coevolutionary (FWSC) optimization.
//!
//! The crate bundles the optimizer ([`engine`]), the F1-F23 benchmark suite
//! ([`benchmarks`]), three constrained engineering design problems
//! ([`constrained`]) and the rank statistics used to compare optimizers
//! ([`stats`]).
//!
//! The problem model and the engine are generic over the floating point type
//! through [`Scalar`]; the aliases below fix it to `f64`.
//!
//! ```
//! use fwsc::{Bounds, FwscParams, Problem};
//!
//! let sphere = Problem::deterministic(
//!     "sphere",
//!     Bounds::uniform(2, -100.0, 100.0).unwrap(),
//!     |x: &[f64]| x.iter().map(|v| v * v).sum(),
//! );
//! let params = FwscParams { max_iterations: 200, ..FwscParams::default() };
//! let result = fwsc::engine::run(&sphere, &params, 42).unwrap();
//! assert!(result.best_fitness < 1e-3);
//! ```

pub mod benchmarks;
pub mod constrained;
pub mod engine;
mod error;
pub mod problem;
pub mod random;
mod scalar;
pub mod stats;

pub use engine::{FwscParams, RunResult};
pub use error::{Error, Result};
pub use problem::{clamp_to_bounds, Bounds, Evaluator, Objective, ObjectiveProblem, Region};
pub use random::{derive_seed, uniform_in_box, RandomStream};
pub use scalar::Scalar;

pub type Problem = ObjectiveProblem<f64>;
pub type Params = FwscParams<f64>;
pub type Outcome = RunResult<f64>;
pub type Box64 = Bounds<f64>;

