use statrs::function::erf::erfc;

use super::friedman::ResultMatrix;
use super::ranks::{mid_ranks, tie_groups};
use crate::{Error, Result};

/// Largest number of nonzero differences handled by the exact null
/// distribution; larger samples use the normal approximation.
pub const EXACT_LIMIT: usize = 20;

/// Two-sided significance level used to flag winners.
pub const SIGNIFICANCE: f64 = 0.05;

/// Paired observations, e.g. per-problem results of two optimizers.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedSamples {
    a: Vec<f64>,
    b: Vec<f64>,
}

impl PairedSamples {
    pub fn new(a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidInput(format!(
                "paired samples differ in length: {} vs {}",
                a.len(),
                b.len()
            )));
        }
        if a.len() < 2 {
            return Err(Error::InvalidInput("need at least two pairs".into()));
        }
        if a.iter().chain(&b).any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("paired samples must be finite".into()));
        }
        Ok(Self { a, b })
    }

    /// Pairs with the given differences against a zero baseline.
    pub fn from_differences(differences: Vec<f64>) -> Result<Self> {
        let zeros = vec![0.0; differences.len()];
        Self::new(differences, zeros)
    }

    /// `a[i] - b[i]`.
    pub fn differences(&self) -> Vec<f64> {
        self.a.iter().zip(&self.b).map(|(x, y)| x - y).collect()
    }

    pub fn swapped(&self) -> Self {
        Self {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PValueMethod {
    Exact,
    NormalApproximation,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WilcoxonResult {
    /// Two-sided p-value.
    pub p_value: f64,
    /// Rank sum of the positive differences `a - b`.
    pub t_plus: f64,
    pub t_minus: f64,
    /// Number of nonzero differences.
    pub n: usize,
    pub method: PValueMethod,
}

/// Wilcoxon signed-rank test on `a - b`. Zero differences are dropped and tied
/// magnitudes get mid-ranks.
pub fn wilcoxon_signed_rank(samples: &PairedSamples) -> Result<WilcoxonResult> {
    let nonzero: Vec<f64> = samples
        .differences()
        .into_iter()
        .filter(|d| *d != 0.0)
        .collect();
    if nonzero.is_empty() {
        return Err(Error::NoInformation);
    }
    let n = nonzero.len();
    let magnitudes: Vec<f64> = nonzero.iter().map(|d| d.abs()).collect();
    let ranks = mid_ranks(&magnitudes);
    // mid-ranks are multiples of 1/2, so doubling makes them exact integers
    let doubled: Vec<u64> = ranks.iter().map(|r| (2.0 * r).round() as u64).collect();
    let plus2: u64 = nonzero
        .iter()
        .zip(&doubled)
        .filter(|(d, _)| **d > 0.0)
        .map(|(_, r)| r)
        .sum();
    let total2: u64 = doubled.iter().sum();
    let t_plus = plus2 as f64 / 2.0;
    let t_minus = (total2 - plus2) as f64 / 2.0;

    if n <= EXACT_LIMIT {
        Ok(WilcoxonResult {
            p_value: exact_p_value(&doubled, plus2),
            t_plus,
            t_minus,
            n,
            method: PValueMethod::Exact,
        })
    } else {
        let nf = n as f64;
        let mean = nf * (nf + 1.0) / 4.0;
        let tie_term: f64 = tie_groups(&magnitudes)
            .into_iter()
            .map(|t| {
                let t = t as f64;
                t * t * t - t
            })
            .sum();
        let variance = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0 - tie_term / 48.0;
        let z = (t_plus - mean) / variance.sqrt();
        Ok(WilcoxonResult {
            p_value: erfc(z.abs() / std::f64::consts::SQRT_2).min(1.0),
            t_plus,
            t_minus,
            n,
            method: PValueMethod::NormalApproximation,
        })
    }
}

/// Two-sided p from the exact permutation distribution of the (doubled)
/// positive rank sum, via subset-sum counting.
fn exact_p_value(doubled_ranks: &[u64], observed: u64) -> f64 {
    let total: u64 = doubled_ranks.iter().sum();
    let mut counts = vec![0u64; total as usize + 1];
    counts[0] = 1;
    let mut reach = 0usize;
    for &r in doubled_ranks {
        let r = r as usize;
        for s in (0..=reach).rev() {
            if counts[s] > 0 {
                counts[s + r] += counts[s];
            }
        }
        reach += r;
    }
    let outcomes = 2f64.powi(doubled_ranks.len() as i32);
    let lower: u64 = counts[..=observed as usize].iter().sum();
    let upper: u64 = counts[observed as usize..].iter().sum();
    let tail = lower.min(upper) as f64 / outcomes;
    (2.0 * tail).min(1.0)
}

/// One row of a pairwise table `"<other> vs <reference>"`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseComparison {
    pub other: String,
    pub reference: String,
    /// T+ collects the pairs where `other` scored lower (better).
    pub outcome: std::result::Result<WilcoxonResult, Error>,
}

impl PairwiseComparison {
    pub fn label(&self) -> String {
        format!("{} vs {}", self.other, self.reference)
    }

    /// Algorithm holding the larger rank sum in its favor; `None` on a tie or
    /// when the test carries no information.
    pub fn winner(&self) -> Option<&str> {
        let r = self.outcome.as_ref().ok()?;
        if r.t_plus > r.t_minus {
            Some(&self.other)
        } else if r.t_minus > r.t_plus {
            Some(&self.reference)
        } else {
            None
        }
    }

    pub fn significant(&self) -> bool {
        self.outcome
            .as_ref()
            .is_ok_and(|r| r.p_value <= SIGNIFICANCE)
    }
}

/// Compares every column of `matrix` (lower is better) against the `reference` column.
pub fn pairwise_against(
    matrix: &ResultMatrix,
    reference: usize,
) -> Result<Vec<PairwiseComparison>> {
    let algorithms = matrix.algorithms();
    if reference >= algorithms.len() {
        return Err(Error::InvalidInput(format!("no algorithm at column {reference}")));
    }
    let base = matrix.column(reference);
    let mut rows = Vec::new();
    for (j, name) in algorithms.iter().enumerate() {
        if j == reference {
            continue;
        }
        let samples = PairedSamples::new(base.clone(), matrix.column(j))?;
        rows.push(PairwiseComparison {
            other: name.clone(),
            reference: algorithms[reference].clone(),
            outcome: wilcoxon_signed_rank(&samples),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_counted_rank_sums() {
        let s = PairedSamples::from_differences(vec![1.0, -2.0, 3.0, -4.0, 5.0]).unwrap();
        let r = wilcoxon_signed_rank(&s).unwrap();
        assert_eq!((r.t_plus, r.t_minus), (9.0, 6.0));
        assert_eq!(r.method, PValueMethod::Exact);
    }

    #[test]
    fn identical_samples_carry_no_information() {
        let s = PairedSamples::new(vec![1.0, 2.0, 3.0], vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(wilcoxon_signed_rank(&s), Err(Error::NoInformation));
    }

    #[test]
    fn seven_pairs_all_one_side() {
        // smallest attainable two-sided p with n = 7 is 2/128
        let s = PairedSamples::from_differences(vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0]).unwrap();
        let r = wilcoxon_signed_rank(&s).unwrap();
        assert_eq!((r.t_plus, r.t_minus), (28.0, 0.0));
        assert_eq!(r.p_value, 0.015625);
    }

    #[test]
    fn zeros_are_dropped() {
        let s = PairedSamples::from_differences(vec![0.0, 1.0, -2.0, 0.0, 3.0]).unwrap();
        let r = wilcoxon_signed_rank(&s).unwrap();
        assert_eq!(r.n, 3);
        assert_eq!((r.t_plus, r.t_minus), (4.0, 2.0));
    }

    #[test]
    fn bad_inputs_rejected() {
        assert!(PairedSamples::new(vec![1.0], vec![1.0]).is_err());
        assert!(PairedSamples::new(vec![1.0, 2.0], vec![1.0]).is_err());
        assert!(PairedSamples::new(vec![1.0, f64::NAN], vec![1.0, 2.0]).is_err());
    }

    #[test]
    fn large_samples_use_normal_approximation() {
        let d: Vec<f64> = (1..=30).map(|i| if i % 3 == 0 { -(i as f64) } else { i as f64 }).collect();
        let r = wilcoxon_signed_rank(&PairedSamples::from_differences(d).unwrap()).unwrap();
        assert_eq!(r.method, PValueMethod::NormalApproximation);
        assert_eq!(r.t_plus + r.t_minus, 465.0);
        assert!(r.p_value > 0.0 && r.p_value < 1.0);
    }

    #[test]
    fn winner_follows_rank_sums() {
        // A lower on every problem
        let values: Vec<Vec<f64>> = (0..6).map(|i| vec![i as f64, 2.0 * i as f64 + 1.0]).collect();
        let problems = (0..6).map(|i| format!("F{i}")).collect();
        let m = ResultMatrix::new(problems, vec!["A".into(), "B".into()], values).unwrap();
        let rows = pairwise_against(&m, 1).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].label(), "A vs B");
        assert_eq!(rows[0].winner(), Some("A"));
        assert!(rows[0].significant());
    }
}
