//! Constrained mixed-variable engineering design problems.
//!
//! Constraints follow the `g(x) <= 0` convention. The search engine only sees
//! box-bounded objectives, so [`ConstrainedProblem::to_objective_problem`]
//! snaps discrete coordinates onto their lattice and adds a static quadratic
//! penalty.

use std::fmt;
use std::sync::{Arc, Mutex};

use crate::scalar::fitness_cmp;
use crate::{Bounds, Error, ObjectiveProblem, Result, Scalar};

mod problems;

pub use problems::{pressure_vessel, stepped_beam, welded_beam};

/// Ids accepted by [`by_id`].
pub const PROBLEM_IDS: [&str; 3] = ["pressure-vessel", "stepped-beam", "welded-beam"];

pub const DEFAULT_PENALTY: f64 = 1e6;

/// Largest constraint value still counted as satisfied.
pub const FEASIBILITY_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub enum VariableKind<S> {
    Continuous,
    /// Integer multiples of `step`.
    Lattice { step: S },
    /// One of an explicit set of values.
    Set(Vec<S>),
}

#[derive(Clone, Copy)]
pub struct Constraint<S> {
    pub name: &'static str,
    pub g: fn(&[S]) -> S,
}

impl<S> fmt::Debug for Constraint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

#[derive(Debug, Clone)]
pub struct ConstrainedProblem<S> {
    pub name: &'static str,
    pub variable_names: Vec<&'static str>,
    pub bounds: Bounds<S>,
    pub kinds: Vec<VariableKind<S>>,
    pub objective: fn(&[S]) -> S,
    pub constraints: Vec<Constraint<S>>,
}

/// Snaps lattice coordinates to the nearest multiple of their step (ties
/// upward) and set coordinates to the nearest member (ties to the larger).
pub fn repair_discrete<S: Scalar>(position: &[S], kinds: &[VariableKind<S>]) -> Vec<S> {
    debug_assert_eq!(position.len(), kinds.len());
    let half = S::lit(0.5);
    position
        .iter()
        .zip(kinds)
        .map(|(&x, kind)| match kind {
            VariableKind::Continuous => x,
            VariableKind::Lattice { step } => (x / *step + half).floor() * *step,
            VariableKind::Set(values) => values
                .iter()
                .copied()
                .fold(None::<S>, |best, v| match best {
                    None => Some(v),
                    Some(b) => {
                        let (db, dv) = ((x - b).abs(), (x - v).abs());
                        if dv < db || (dv == db && v > b) {
                            Some(v)
                        } else {
                            Some(b)
                        }
                    }
                })
                .unwrap_or(x),
        })
        .collect()
}

impl<S: Scalar> ConstrainedProblem<S> {
    pub fn dimension(&self) -> usize {
        self.bounds.dimension()
    }

    pub fn objective_value(&self, position: &[S]) -> S {
        (self.objective)(position)
    }

    pub fn constraint_values(&self, position: &[S]) -> Vec<S> {
        self.constraints.iter().map(|c| (c.g)(position)).collect()
    }

    /// Largest positive constraint value, zero when feasible.
    pub fn max_violation(&self, position: &[S]) -> S {
        self.constraint_values(position)
            .into_iter()
            .fold(S::zero(), |acc, g| acc.max(g))
    }

    pub fn is_feasible(&self, position: &[S]) -> bool {
        self.max_violation(position) <= S::lit(FEASIBILITY_TOLERANCE)
    }

    pub fn repair(&self, position: &[S]) -> Vec<S> {
        repair_discrete(position, &self.kinds)
    }

    /// `f(x) + coefficient * sum(max(0, g_j(x))^2)`.
    pub fn penalize(&self, position: &[S], coefficient: S) -> Result<S> {
        check_coefficient(coefficient)?;
        Ok(penalized_value(self, position, coefficient))
    }

    /// Box-bounded view evaluated on the repaired position.
    pub fn to_objective_problem(&self, coefficient: S) -> Result<ObjectiveProblem<S>> {
        check_coefficient(coefficient)?;
        let me = self.clone();
        Ok(ObjectiveProblem::deterministic(
            self.name,
            self.bounds.clone(),
            move |x: &[S]| penalized_value(&me, &me.repair(x), coefficient),
        ))
    }

    /// Like [`ConstrainedProblem::to_objective_problem`], and additionally
    /// records the best feasible repaired design evaluated through the
    /// returned problem.
    pub fn with_feasible_record(
        &self,
        coefficient: S,
    ) -> Result<(ObjectiveProblem<S>, FeasibleRecord<S>)> {
        check_coefficient(coefficient)?;
        let record = FeasibleRecord::default();
        let sink = record.clone();
        let me = self.clone();
        let problem = ObjectiveProblem::deterministic(self.name, self.bounds.clone(), move |x: &[S]| {
            let repaired = me.repair(x);
            let f = me.objective_value(&repaired);
            let violation = me.max_violation(&repaired);
            if violation <= S::lit(FEASIBILITY_TOLERANCE) {
                sink.offer(&repaired, f);
            }
            penalized_value(&me, &repaired, coefficient)
        });
        Ok((problem, record))
    }
}

fn check_coefficient<S: Scalar>(coefficient: S) -> Result<()> {
    if coefficient > S::zero() && coefficient.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParams {
            field: "penalty",
            reason: format!("coefficient must be positive and finite, got {coefficient}"),
        })
    }
}

fn penalized_value<S: Scalar>(problem: &ConstrainedProblem<S>, x: &[S], coefficient: S) -> S {
    let excess = problem
        .constraint_values(x)
        .into_iter()
        .fold(S::zero(), |acc, g| {
            let v = g.max(S::zero());
            acc + v * v
        });
    problem.objective_value(x) + coefficient * excess
}

/// Best feasible design seen, shared between an objective closure and the
/// caller that built it.
#[derive(Debug, Clone)]
pub struct FeasibleRecord<S> {
    inner: Arc<Mutex<Option<(Vec<S>, S)>>>,
}

impl<S> Default for FeasibleRecord<S> {
    fn default() -> Self {
        Self {
            inner: Arc::new(Mutex::new(None)),
        }
    }
}

impl<S: Scalar> FeasibleRecord<S> {
    fn offer(&self, position: &[S], objective: S) {
        let mut slot = self.inner.lock().expect("feasible record poisoned");
        let better = match slot.as_ref() {
            None => true,
            Some((_, best)) => fitness_cmp(objective, *best).is_lt(),
        };
        if better {
            *slot = Some((position.to_vec(), objective));
        }
    }

    pub fn best(&self) -> Option<(Vec<S>, S)> {
        self.inner.lock().expect("feasible record poisoned").clone()
    }
}

/// Looks up one of [`PROBLEM_IDS`].
pub fn by_id<S: Scalar>(id: &str) -> Result<ConstrainedProblem<S>> {
    match id {
        "pressure-vessel" => Ok(pressure_vessel()),
        "stepped-beam" => Ok(stepped_beam()),
        "welded-beam" => Ok(welded_beam()),
        other => Err(Error::UnknownProblem(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_rounds_to_nearest_step() {
        let kinds = vec![VariableKind::Lattice { step: 0.0625 }];
        assert_eq!(repair_discrete(&[0.871], &kinds), vec![0.875]);
        assert_eq!(repair_discrete(&[0.8125], &kinds), vec![0.8125]);
        assert_eq!(repair_discrete(&[0.03125], &kinds), vec![0.0625]);
    }

    #[test]
    fn integer_lattice_and_sets() {
        let kinds = vec![
            VariableKind::Lattice { step: 1.0 },
            VariableKind::Set(vec![2.4, 2.6, 2.8, 3.1]),
            VariableKind::Continuous,
        ];
        assert_eq!(repair_discrete(&[3.4, 2.95, 1.234], &kinds), vec![3.0, 3.1, 1.234]);
        assert_eq!(repair_discrete(&[2.5, 2.7, 0.0], &kinds)[..2], [3.0, 2.8]);
    }

    #[test]
    fn penalty_definition() {
        let p = pressure_vessel::<f64>();
        let x = [0.8125, 0.4375, 42.0912, 176.7465];
        assert!(p.is_feasible(&x));
        assert_eq!(p.penalize(&x, 1e6).unwrap(), p.objective_value(&x));
        // violate only the length limit
        let y = [0.8125, 0.4375, 42.0912, 241.0];
        let v = p.max_violation(&y);
        assert!((v - 1.0).abs() < 1e-12);
        let expected = p.objective_value(&y) + 5.0 * v * v;
        assert!((p.penalize(&y, 5.0).unwrap() - expected).abs() < 1e-9);
        assert!(p.penalize(&x, 0.0).is_err());
        assert!(p.to_objective_problem(-1.0).is_err());
    }

    #[test]
    fn lookup_by_id() {
        for id in PROBLEM_IDS {
            assert_eq!(by_id::<f64>(id).unwrap().name, id);
        }
        assert_eq!(
            by_id::<f64>("truss").unwrap_err(),
            Error::UnknownProblem("truss".into())
        );
    }

    #[test]
    fn feasible_record_keeps_best_feasible() {
        let p = pressure_vessel::<f64>();
        let (problem, record) = p.with_feasible_record(1e6).unwrap();
        let mut rng = crate::RandomStream::new(0);
        problem.evaluate(&[1.125, 0.625, 55.0, 100.0], &mut rng).unwrap();
        let first = record.best().unwrap().1;
        problem.evaluate(&[0.8125, 0.4375, 42.0912, 176.7465], &mut rng).unwrap();
        let second = record.best().unwrap().1;
        assert!(second < first);
        // infeasible point never recorded
        problem.evaluate(&[0.0625, 0.0625, 10.0, 10.0], &mut rng).unwrap();
        assert_eq!(record.best().unwrap().1, second);
    }
}
