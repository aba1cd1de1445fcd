//! Box-bounded minimization problems and the per-run evaluation context.

use std::fmt;
use std::sync::Arc;

use crate::random::RandomStream;
use crate::scalar::fitness_cmp;
use crate::{Error, Result, Scalar};

/// Box constraints `lower[i] < upper[i]` of a problem.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds<S> {
    lower: Vec<S>,
    upper: Vec<S>,
}

impl<S: Scalar> Bounds<S> {
    pub fn new(lower: Vec<S>, upper: Vec<S>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidBounds("dimension must be positive".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::InvalidBounds(format!(
                "lower has {} entries, upper has {}",
                lower.len(),
                upper.len()
            )));
        }
        for (i, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::InvalidBounds(format!(
                    "dimension {i}: lower {lo} must be finite and strictly below upper {hi}"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval `[lower, upper]` in every one of `dimension` coordinates.
    pub fn uniform(dimension: usize, lower: S, upper: S) -> Result<Self> {
        Self::new(vec![lower; dimension], vec![upper; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[S] {
        &self.lower
    }

    pub fn upper(&self) -> &[S] {
        &self.upper
    }

    pub fn contains(&self, position: &[S]) -> bool {
        position.len() == self.dimension()
            && position
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(x, (lo, hi))| lo <= x && x <= hi)
    }

    /// Checks `position` against dimension and box, reporting the first offence.
    pub fn check(&self, position: &[S]) -> Result<()> {
        if position.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: position.len(),
            });
        }
        for (i, ((&x, &lo), &hi)) in position
            .iter()
            .zip(&self.lower)
            .zip(&self.upper)
            .enumerate()
        {
            // NaN fails both comparisons
            if !(lo <= x && x <= hi) {
                return Err(Error::OutOfBounds {
                    index: i,
                    value: x.as_f64(),
                    lower: lo.as_f64(),
                    upper: hi.as_f64(),
                });
            }
        }
        Ok(())
    }
}

/// Projects each coordinate onto `[lower[i], upper[i]]`.
pub fn clamp_to_bounds<S: Scalar>(position: &[S], bounds: &Bounds<S>) -> Vec<S> {
    debug_assert_eq!(position.len(), bounds.dimension());
    position
        .iter()
        .zip(bounds.lower.iter().zip(&bounds.upper))
        .map(|(&x, (&lo, &hi))| x.max(lo).min(hi))
        .collect()
}

/// In-place variant of [`clamp_to_bounds`].
pub fn clamp_in_place<S: Scalar>(position: &mut [S], bounds: &Bounds<S>) {
    for (x, (&lo, &hi)) in position
        .iter_mut()
        .zip(bounds.lower.iter().zip(&bounds.upper))
    {
        *x = x.max(lo).min(hi);
    }
}

/// A local neighborhood `[center - radius, center + radius]` intersected with
/// the global bounds. Unlike [`Bounds`] it may be degenerate (`lower == upper`)
/// as the radius shrinks towards zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Region<S> {
    pub lower: Vec<S>,
    pub upper: Vec<S>,
}

impl<S: Scalar> Region<S> {
    pub fn around(center: &[S], radius: S, global: &Bounds<S>) -> Self {
        Self::around_radii(center, &vec![radius; center.len()], global)
    }

    /// Like [`Region::around`] with a separate radius per coordinate.
    pub fn around_radii(center: &[S], radii: &[S], global: &Bounds<S>) -> Self {
        let lower = center
            .iter()
            .zip(radii)
            .zip(global.lower())
            .map(|((&c, &r), &lo)| (c - r).max(lo))
            .collect();
        let upper = center
            .iter()
            .zip(radii)
            .zip(global.upper())
            .map(|((&c, &r), &hi)| (c + r).min(hi))
            .collect();
        Self { lower, upper }
    }

    pub fn contains(&self, position: &[S]) -> bool {
        position
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(x, (lo, hi))| lo <= x && x <= hi)
    }

    pub fn is_within(&self, global: &Bounds<S>) -> bool {
        self.lower
            .iter()
            .zip(&self.upper)
            .zip(global.lower().iter().zip(global.upper()))
            .all(|((lo, hi), (glo, ghi))| glo <= lo && lo <= hi && hi <= ghi)
    }

    pub fn max_width(&self) -> S {
        self.lower
            .iter()
            .zip(&self.upper)
            .fold(S::zero(), |acc, (&lo, &hi)| acc.max(hi - lo))
    }
}

/// An objective function. Stochastic objectives draw their noise from the
/// supplied stream so that evaluation stays reproducible per run.
pub trait Objective<S>: Send + Sync {
    fn value(&self, position: &[S], noise: &mut RandomStream) -> S;
}

impl<S, F> Objective<S> for F
where
    F: Fn(&[S], &mut RandomStream) -> S + Send + Sync,
{
    fn value(&self, position: &[S], noise: &mut RandomStream) -> S {
        self(position, noise)
    }
}

/// A box-bounded minimization problem.
#[derive(Clone)]
pub struct ObjectiveProblem<S> {
    name: String,
    bounds: Bounds<S>,
    objective: Arc<dyn Objective<S>>,
}

impl<S: Scalar> ObjectiveProblem<S> {
    pub fn new(name: impl Into<String>, bounds: Bounds<S>, objective: impl Objective<S> + 'static) -> Self {
        Self {
            name: name.into(),
            bounds,
            objective: Arc::new(objective),
        }
    }

    /// Problem with a deterministic objective.
    pub fn deterministic<F>(name: impl Into<String>, bounds: Bounds<S>, f: F) -> Self
    where
        F: Fn(&[S]) -> S + Send + Sync + 'static,
    {
        Self::new(name, bounds, move |x: &[S], _: &mut RandomStream| f(x))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.bounds.dimension()
    }

    pub fn bounds(&self) -> &Bounds<S> {
        &self.bounds
    }

    /// `f(position)` after checking dimension and bounds.
    pub fn evaluate(&self, position: &[S], noise: &mut RandomStream) -> Result<S> {
        self.bounds.check(position)?;
        Ok(self.objective.value(position, noise))
    }
}

impl<S: Scalar> fmt::Debug for ObjectiveProblem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ObjectiveProblem")
            .field("name", &self.name)
            .field("dimension", &self.dimension())
            .finish_non_exhaustive()
    }
}

/// Per-run evaluation context: owns the noise stream, counts evaluations and
/// remembers the best point seen so far.
pub struct Evaluator<'p, S> {
    problem: &'p ObjectiveProblem<S>,
    noise: RandomStream,
    evaluations: u64,
    best: Option<(Vec<S>, S)>,
}

impl<'p, S: Scalar> Evaluator<'p, S> {
    pub fn new(problem: &'p ObjectiveProblem<S>, noise: RandomStream) -> Self {
        Self {
            problem,
            noise,
            evaluations: 0,
            best: None,
        }
    }

    pub fn problem(&self) -> &'p ObjectiveProblem<S> {
        self.problem
    }

    /// Evaluates `position`. NaN results are reported as `+inf` so fitness
    /// values are totally ordered.
    pub fn evaluate(&mut self, position: &[S]) -> Result<S> {
        let raw = self.problem.evaluate(position, &mut self.noise)?;
        let value = if raw.is_nan() { S::infinity() } else { raw };
        self.evaluations += 1;
        let improved = match &self.best {
            None => true,
            Some((_, best)) => fitness_cmp(value, *best).is_lt(),
        };
        if improved {
            self.best = Some((position.to_vec(), value));
        }
        Ok(value)
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    pub fn best(&self) -> Option<(&[S], S)> {
        self.best.as_ref().map(|(x, f)| (x.as_slice(), *f))
    }

    pub fn into_best(self) -> Option<(Vec<S>, S)> {
        self.best
    }
}
