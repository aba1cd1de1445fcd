use statrs::function::gamma::gamma_ur;

use super::ranks::{dense_ordinals, mid_ranks, tie_groups};
use crate::{Error, Result};

/// Problems as rows, algorithms as columns, lower values better.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultMatrix {
    problems: Vec<String>,
    algorithms: Vec<String>,
    values: Vec<Vec<f64>>,
}

impl ResultMatrix {
    pub fn new(problems: Vec<String>, algorithms: Vec<String>, values: Vec<Vec<f64>>) -> Result<Self> {
        if problems.len() != values.len() {
            return Err(Error::InvalidInput(format!(
                "{} problem labels for {} rows",
                problems.len(),
                values.len()
            )));
        }
        if problems.len() < 2 || algorithms.len() < 2 {
            return Err(Error::InvalidInput(
                "need at least two problems and two algorithms".into(),
            ));
        }
        for (label, row) in problems.iter().zip(&values) {
            if row.len() != algorithms.len() {
                return Err(Error::InvalidInput(format!(
                    "row {label} has {} cells, expected {}",
                    row.len(),
                    algorithms.len()
                )));
            }
            if row.iter().any(|v| v.is_nan()) {
                return Err(Error::InvalidInput(format!("row {label} has a missing value")));
            }
        }
        Ok(Self {
            problems,
            algorithms,
            values,
        })
    }

    /// Matrix with generated labels `P1..` and `A1..`.
    pub fn from_rows(values: Vec<Vec<f64>>) -> Result<Self> {
        let k = values.first().map_or(0, Vec::len);
        let problems = (1..=values.len()).map(|i| format!("P{i}")).collect();
        let algorithms = (1..=k).map(|j| format!("A{j}")).collect();
        Self::new(problems, algorithms, values)
    }

    pub fn problems(&self) -> &[String] {
        &self.problems
    }

    pub fn algorithms(&self) -> &[String] {
        &self.algorithms
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.values.iter().map(|row| row[j]).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FriedmanRanks {
    pub mean_ranks: Vec<f64>,
    /// 1 for the smallest mean rank; equal means share an ordinal.
    pub ranking: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FriedmanTest {
    pub chi_square: f64,
    pub p_value: f64,
}

fn row_ranks(matrix: &ResultMatrix) -> Vec<Vec<f64>> {
    matrix.values.iter().map(|row| mid_ranks(row)).collect()
}

pub fn friedman_mean_ranks(matrix: &ResultMatrix) -> FriedmanRanks {
    let ranks = row_ranks(matrix);
    let n = ranks.len() as f64;
    let mean_ranks: Vec<f64> = (0..matrix.algorithms.len())
        .map(|j| ranks.iter().map(|r| r[j]).sum::<f64>() / n)
        .collect();
    let ranking = dense_ordinals(&mean_ranks);
    FriedmanRanks {
        mean_ranks,
        ranking,
    }
}

/// Tie-corrected Friedman chi-square with `k - 1` degrees of freedom.
pub fn friedman_statistic(matrix: &ResultMatrix) -> FriedmanTest {
    let n = matrix.values.len() as f64;
    let k = matrix.algorithms.len() as f64;
    let means = friedman_mean_ranks(matrix).mean_ranks;
    let sum_sq: f64 = means.iter().map(|r| r * r).sum();
    let raw = 12.0 * n / (k * (k + 1.0)) * (sum_sq - k * (k + 1.0).powi(2) / 4.0);
    let ties: f64 = matrix
        .values
        .iter()
        .flat_map(|row| tie_groups(row))
        .map(|t| {
            let t = t as f64;
            t * t * t - t
        })
        .sum();
    let correction = 1.0 - ties / (n * (k * k * k - k));
    if correction <= 0.0 {
        // every row fully tied
        return FriedmanTest {
            chi_square: 0.0,
            p_value: 1.0,
        };
    }
    let chi_square = (raw / correction).max(0.0);
    let p_value = if chi_square == 0.0 {
        1.0
    } else {
        gamma_ur((k - 1.0) / 2.0, chi_square / 2.0)
    };
    FriedmanTest {
        chi_square,
        p_value,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_columns() {
        let m = ResultMatrix::from_rows(vec![vec![3.0; 4], vec![1.0; 4], vec![2.0; 4]]).unwrap();
        let r = friedman_mean_ranks(&m);
        assert_eq!(r.mean_ranks, vec![2.5; 4]);
        assert_eq!(r.ranking, vec![1; 4]);
        assert_eq!(
            friedman_statistic(&m),
            FriedmanTest {
                chi_square: 0.0,
                p_value: 1.0
            }
        );
    }

    #[test]
    fn dominance_two_algorithms() {
        let rows = (0..10).map(|i| vec![i as f64, i as f64 + 0.5]).collect();
        let m = ResultMatrix::from_rows(rows).unwrap();
        let r = friedman_mean_ranks(&m);
        assert_eq!(r.mean_ranks, vec![1.0, 2.0]);
        assert_eq!(r.ranking, vec![1, 2]);
        let t = friedman_statistic(&m);
        assert!((t.chi_square - 10.0).abs() < 1e-12);
        // chi-square(1) tail at 10
        assert!((t.p_value - 0.001565402258002549).abs() < 1e-12);
    }

    #[test]
    fn hand_ranked_three_by_three() {
        let m = ResultMatrix::from_rows(vec![
            vec![1.0, 2.0, 3.0],
            vec![5.0, 4.0, 6.0],
            vec![7.0, 9.0, 8.0],
        ])
        .unwrap();
        let r = friedman_mean_ranks(&m);
        assert_eq!(r.mean_ranks, vec![4.0 / 3.0, 2.0, 8.0 / 3.0]);
        assert_eq!(r.ranking, vec![1, 2, 3]);
    }

    #[test]
    fn rejects_ragged_or_missing() {
        assert!(ResultMatrix::from_rows(vec![vec![1.0, 2.0], vec![1.0]]).is_err());
        assert!(ResultMatrix::from_rows(vec![vec![1.0, f64::NAN], vec![1.0, 2.0]]).is_err());
        assert!(ResultMatrix::from_rows(vec![vec![1.0, 2.0]]).is_err());
    }
}
