//! `fwsc stats`: Friedman ranking and pairwise Wilcoxon tables from several
//! result files.

use std::collections::{BTreeSet, HashMap};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use fwsc::stats::{
    friedman_mean_ranks, friedman_statistic, pairwise_against, FriedmanRanks, FriedmanTest,
    PairwiseComparison, ResultMatrix,
};

use crate::output::{sci, write_csv};

pub const FRIEDMAN_FILE: &str = "friedman.csv";
pub const FRIEDMAN_TEST_FILE: &str = "friedman_test.csv";
pub const WILCOXON_FILE: &str = "wilcoxon.csv";

/// One algorithm's result file. `NAME=PATH` names it explicitly; otherwise
/// the file stem is used, or the parent directory for `summary.csv`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultSource {
    pub name: String,
    pub path: PathBuf,
}

impl ResultSource {
    pub fn parse(arg: &str) -> Self {
        if let Some((name, path)) = arg.split_once('=') {
            return Self { name: name.to_string(), path: PathBuf::from(path) };
        }
        let path = PathBuf::from(arg);
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let name = if stem == "summary" {
            path.parent()
                .and_then(Path::file_name)
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or(stem)
        } else {
            stem
        };
        Self { name, path }
    }
}

type RowKey = (String, String);

fn read_column(source: &ResultSource, column: &str) -> Result<Vec<(RowKey, f64)>> {
    let mut reader = csv::Reader::from_path(&source.path)
        .with_context(|| format!("opening {}", source.path.display()))?;
    let headers = reader.headers()?.clone();
    let find = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .with_context(|| format!("{} has no {name:?} column", source.path.display()))
    };
    let (p, d, v) = (find("problem")?, find("dimension")?, find(column)?);
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record?;
        let value: f64 = record[v]
            .parse()
            .with_context(|| format!("{}: bad value {:?}", source.path.display(), &record[v]))?;
        rows.push(((record[p].to_string(), record[d].to_string()), value));
    }
    Ok(rows)
}

#[derive(Debug, Clone)]
pub struct Comparison {
    pub matrix: ResultMatrix,
    pub ranks: FriedmanRanks,
    pub test: FriedmanTest,
    pub pairwise: Vec<PairwiseComparison>,
}

/// Aligns the files on (problem, dimension) and runs both tests against the
/// `reference` algorithm (the last file when `None`).
pub fn compare(sources: &[ResultSource], column: &str, reference: Option<&str>) -> Result<Comparison> {
    if sources.len() < 2 {
        bail!("need at least two result files, got {}", sources.len());
    }
    let tables = sources
        .iter()
        .map(|s| read_column(s, column))
        .collect::<Result<Vec<_>>>()?;
    let order: Vec<RowKey> = tables[0].iter().map(|(k, _)| k.clone()).collect();
    let expected: BTreeSet<&RowKey> = order.iter().collect();
    for (source, table) in sources.iter().zip(&tables).skip(1) {
        let found: BTreeSet<&RowKey> = table.iter().map(|(k, _)| k).collect();
        if found != expected || found.len() != table.len() {
            let show = |keys: Vec<&&RowKey>| {
                keys.iter().map(|(p, d)| format!("{p}/{d}")).collect::<Vec<_>>().join(", ")
            };
            bail!(
                "{} does not match {}: missing [{}], extra [{}]",
                source.name,
                sources[0].name,
                show(expected.difference(&found).collect()),
                show(found.difference(&expected).collect()),
            );
        }
    }
    let lookups: Vec<HashMap<&RowKey, f64>> = tables
        .iter()
        .map(|t| t.iter().map(|(k, v)| (k, *v)).collect())
        .collect();
    let values: Vec<Vec<f64>> = order
        .iter()
        .map(|k| lookups.iter().map(|l| l[k]).collect())
        .collect();
    let names: Vec<String> = sources.iter().map(|s| s.name.clone()).collect();
    let reference = match reference {
        Some(r) => names
            .iter()
            .position(|n| n == r)
            .with_context(|| format!("no result file named {r}"))?,
        None => names.len() - 1,
    };
    let problems = order.iter().map(|(p, d)| format!("{p}/{d}")).collect();
    let matrix = ResultMatrix::new(problems, names, values)?;
    Ok(Comparison {
        ranks: friedman_mean_ranks(&matrix),
        test: friedman_statistic(&matrix),
        pairwise: pairwise_against(&matrix, reference)?,
        matrix,
    })
}

pub fn wilcoxon_rows(pairwise: &[PairwiseComparison]) -> Vec<Vec<String>> {
    pairwise
        .iter()
        .map(|c| match &c.outcome {
            Ok(r) => vec![
                c.label(),
                sci(r.p_value),
                r.t_plus.to_string(),
                r.t_minus.to_string(),
                c.winner().unwrap_or("tie").to_string(),
                if c.significant() { "yes" } else { "not significant" }.to_string(),
            ],
            Err(_) => vec![
                c.label(),
                String::new(),
                "0".into(),
                "0".into(),
                "no information".into(),
                "not significant".into(),
            ],
        })
        .collect()
}

pub fn write_comparison(out: &Path, c: &Comparison) -> Result<()> {
    let mut header = vec!["Algorithm"];
    header.extend(c.matrix.algorithms().iter().map(String::as_str));
    let mut means = vec!["Mean Values".to_string()];
    means.extend(c.ranks.mean_ranks.iter().map(|r| sci(*r)));
    let mut ranking = vec!["Ranking".to_string()];
    ranking.extend(c.ranks.ranking.iter().map(ToString::to_string));
    write_csv(&out.join(FRIEDMAN_FILE), &header, &[means, ranking])?;
    write_csv(
        &out.join(FRIEDMAN_TEST_FILE),
        &["problems", "algorithms", "chi_square", "p_value"],
        &[vec![
            c.matrix.problems().len().to_string(),
            c.matrix.algorithms().len().to_string(),
            sci(c.test.chi_square),
            sci(c.test.p_value),
        ]],
    )?;
    write_csv(
        &out.join(WILCOXON_FILE),
        &["comparison", "p_value", "t_plus", "t_minus", "winner", "significant"],
        &wilcoxon_rows(&c.pairwise),
    )
}
