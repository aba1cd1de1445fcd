//! The F1-F23 benchmark suite: thirteen scalable functions (F1-F13, at 30,
//! 100, 500 or 1000 dimensions) and ten fixed-dimension multimodal ones.

use std::fmt;
use std::str::FromStr;

use crate::random::RandomStream;
use crate::{Bounds, Error, ObjectiveProblem, Result, Scalar};

pub mod functions;

/// Dimensions the scalable functions are run at.
pub const SCALABLE_DIMENSIONS: [usize; 4] = [30, 100, 500, 1000];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BenchmarkId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
    F19,
    F20,
    F21,
    F22,
    F23,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    UnimodalSeparable,
    UnimodalNonseparable,
    MultimodalSeparable,
    MultimodalNonseparable,
    FixedDimension,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Dimensions {
    Scalable,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KnownMinimum {
    Constant(f64),
    PerDimension(f64),
}

/// Static description of one benchmark.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchmarkSpec {
    pub id: BenchmarkId,
    pub name: &'static str,
    pub category: Category,
    pub dimensions: Dimensions,
    /// Search interval applied to every coordinate.
    pub range: (f64, f64),
    pub f_min: KnownMinimum,
}

use BenchmarkId::*;
use Category::*;
use Dimensions::*;
use KnownMinimum::*;

const fn spec(
    id: BenchmarkId,
    name: &'static str,
    category: Category,
    dimensions: Dimensions,
    range: (f64, f64),
    f_min: KnownMinimum,
) -> BenchmarkSpec {
    BenchmarkSpec {
        id,
        name,
        category,
        dimensions,
        range,
        f_min,
    }
}

static SPECS: [BenchmarkSpec; 23] = [
    spec(F1, "Sphere", UnimodalSeparable, Scalable, (-100.0, 100.0), Constant(0.0)),
    spec(F2, "Schwefel 2.22", UnimodalNonseparable, Scalable, (-10.0, 10.0), Constant(0.0)),
    spec(F3, "Schwefel 1.2", UnimodalNonseparable, Scalable, (-100.0, 100.0), Constant(0.0)),
    spec(F4, "Schwefel 2.21", UnimodalSeparable, Scalable, (-100.0, 100.0), Constant(0.0)),
    spec(F5, "Rosenbrock", UnimodalNonseparable, Scalable, (-30.0, 30.0), Constant(0.0)),
    spec(F6, "Step", UnimodalSeparable, Scalable, (-100.0, 100.0), Constant(0.0)),
    spec(F7, "Quartic", UnimodalSeparable, Scalable, (-128.0, 128.0), Constant(0.0)),
    spec(F8, "Schwefel", MultimodalSeparable, Scalable, (-500.0, 500.0), PerDimension(-418.9829)),
    spec(F9, "Rastrigin", MultimodalSeparable, Scalable, (-5.12, 5.12), Constant(0.0)),
    spec(F10, "Ackley", MultimodalNonseparable, Scalable, (-32.0, 32.0), Constant(0.0)),
    spec(F11, "Griewank", MultimodalNonseparable, Scalable, (-600.0, 600.0), Constant(0.0)),
    spec(F12, "Penalized", MultimodalNonseparable, Scalable, (-50.0, 50.0), Constant(0.0)),
    spec(F13, "Penalized2", MultimodalNonseparable, Scalable, (-50.0, 50.0), Constant(0.0)),
    spec(F14, "Foxholes", FixedDimension, Fixed(2), (-65.0, 65.0), Constant(1.0)),
    spec(F15, "Kowalik", FixedDimension, Fixed(4), (-5.0, 5.0), Constant(0.0003)),
    spec(F16, "Six Hump Camel", FixedDimension, Fixed(2), (-5.0, 5.0), Constant(-1.0316)),
    spec(F17, "Branin", FixedDimension, Fixed(2), (-5.0, 5.0), Constant(0.398)),
    spec(F18, "Goldstein-Price", FixedDimension, Fixed(2), (-2.0, 2.0), Constant(3.0)),
    spec(F19, "Hartman 3", FixedDimension, Fixed(3), (1.0, 3.0), Constant(-3.86)),
    spec(F20, "Hartman 6", FixedDimension, Fixed(6), (0.0, 1.0), Constant(-3.32)),
    spec(F21, "Shekel 5", FixedDimension, Fixed(4), (0.0, 10.0), Constant(-10.1532)),
    spec(F22, "Shekel 7", FixedDimension, Fixed(4), (0.0, 10.0), Constant(-10.4028)),
    spec(F23, "Shekel 10", FixedDimension, Fixed(4), (0.0, 10.0), Constant(-10.5363)),
];

impl BenchmarkId {
    pub const ALL: [BenchmarkId; 23] = [
        F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13, F14, F15, F16, F17, F18, F19,
        F20, F21, F22, F23,
    ];

    pub fn spec(self) -> &'static BenchmarkSpec {
        &SPECS[self as usize]
    }

    pub fn is_scalable(self) -> bool {
        self.spec().dimensions == Scalable
    }

    pub fn allowed_dimensions(self) -> Vec<usize> {
        match self.spec().dimensions {
            Scalable => SCALABLE_DIMENSIONS.to_vec(),
            Fixed(n) => vec![n],
        }
    }

    /// Default dimension: 30 for the scalable functions.
    pub fn default_dimension(self) -> usize {
        match self.spec().dimensions {
            Scalable => SCALABLE_DIMENSIONS[0],
            Fixed(n) => n,
        }
    }

    pub fn check_dimension(self, dimension: usize) -> Result<()> {
        let allowed = self.allowed_dimensions();
        if allowed.contains(&dimension) {
            Ok(())
        } else {
            Err(Error::UnsupportedDimension {
                id: self.to_string(),
                dimension,
                allowed: allowed
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", "),
            })
        }
    }

    /// Noise-free value of the function at `x`, for any length the formula
    /// accepts.
    pub fn value<S: Scalar>(self, x: &[S]) -> S {
        use functions::*;
        match self {
            F1 => sphere(x),
            F2 => schwefel_2_22(x),
            F3 => schwefel_1_2(x),
            F4 => schwefel_2_21(x),
            F5 => rosenbrock(x),
            F6 => step(x),
            F7 => quartic(x),
            F8 => schwefel_2_26(x),
            F9 => rastrigin(x),
            F10 => ackley(x),
            F11 => griewank(x),
            F12 => penalized(x),
            F13 => penalized2(x),
            F14 => foxholes(x),
            F15 => kowalik(x),
            F16 => six_hump_camel(x),
            F17 => branin(x),
            F18 => goldstein_price(x),
            F19 => hartman3(x),
            F20 => hartman6(x),
            F21 => shekel(x, 5),
            F22 => shekel(x, 7),
            F23 => shekel(x, 10),
        }
    }
}

impl fmt::Display for BenchmarkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", *self as usize + 1)
    }
}

impl FromStr for BenchmarkId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let index = s
            .strip_prefix('F')
            .or_else(|| s.strip_prefix('f'))
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|n| (1..=23).contains(n))
            .ok_or_else(|| Error::UnknownProblem(s.to_string()))?;
        Ok(Self::ALL[index - 1])
    }
}

/// Whether F7 adds its uniform noise term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Noise {
    #[default]
    Enabled,
    Disabled,
}

/// Builds the benchmark problem `id` at `dimension`.
pub fn make_benchmark<S: Scalar>(id: BenchmarkId, dimension: usize) -> Result<ObjectiveProblem<S>> {
    make_benchmark_with(id, dimension, Noise::Enabled)
}

pub fn make_benchmark_with<S: Scalar>(
    id: BenchmarkId,
    dimension: usize,
    noise: Noise,
) -> Result<ObjectiveProblem<S>> {
    id.check_dimension(dimension)?;
    let (lo, hi) = id.spec().range;
    let bounds = Bounds::uniform(dimension, S::lit(lo), S::lit(hi))?;
    let name = format!("{id}");
    if id == F7 && noise == Noise::Enabled {
        Ok(ObjectiveProblem::new(name, bounds, move |x: &[S], rng: &mut RandomStream| {
            let jitter: S = rng.uniform();
            id.value(x) + jitter
        }))
    } else {
        Ok(ObjectiveProblem::deterministic(name, bounds, move |x: &[S]| id.value(x)))
    }
}

/// Tabulated minimum, scaled by the dimension where the table says so.
pub fn known_optimum(id: BenchmarkId, dimension: usize) -> Result<f64> {
    id.check_dimension(dimension)?;
    Ok(match id.spec().f_min {
        Constant(v) => v,
        PerDimension(v) => v * dimension as f64,
    })
}

/// A point attaining the tabulated minimum exactly, where one is known in
/// closed form.
pub fn optimum_witness<S: Scalar>(id: BenchmarkId, dimension: usize) -> Result<Option<Vec<S>>> {
    id.check_dimension(dimension)?;
    let fill = |v: f64| Some(vec![S::lit(v); dimension]);
    Ok(match id {
        F1 | F2 | F3 | F4 | F6 | F7 | F9 | F10 | F11 => fill(0.0),
        F5 | F13 => fill(1.0),
        F12 => fill(-1.0),
        F18 => Some(vec![S::zero(), -S::one()]),
        // minimizers are numerical and the tabulated minima rounded
        F8 | F14 | F15 | F16 | F17 | F19 | F20 | F21 | F22 | F23 => None,
    })
}
