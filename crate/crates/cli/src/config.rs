//! Versioned TOML experiment files.

use std::path::Path;

use anyhow::{bail, Context, Result};
use fwsc::engine::NeighborhoodScale;
use fwsc::FwscParams;
use serde::Deserialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentFile {
    pub schema_version: u32,
    pub seed: Option<u64>,
    pub runs: Option<usize>,
    pub dimension: Option<usize>,
    pub problems: Option<Vec<String>>,
    pub trace: Option<bool>,
    pub out: Option<String>,
    #[serde(default)]
    pub params: ParamsSection,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsSection {
    pub num_trees: Option<usize>,
    pub figs_per_tree: Option<usize>,
    pub wasps_per_fig: Option<usize>,
    pub eta0: Option<f64>,
    pub wind_threshold: Option<f64>,
    pub wind_fraction: Option<f64>,
    pub decay: Option<f64>,
    pub max_iterations: Option<usize>,
    pub stagnation_window: Option<usize>,
    /// `"absolute"` or `"range-relative"`.
    pub neighborhood_scale: Option<String>,
}

impl ParamsSection {
    pub fn apply(&self, mut p: FwscParams<f64>) -> Result<FwscParams<f64>> {
        macro_rules! set {
            ($($field:ident),*) => {
                $(if let Some(v) = self.$field { p.$field = v; })*
            };
        }
        set!(num_trees, figs_per_tree, wasps_per_fig, eta0, wind_threshold, wind_fraction, max_iterations);
        if self.decay.is_some() {
            p.decay = self.decay;
        }
        if self.stagnation_window.is_some() {
            p.stagnation_window = self.stagnation_window;
        }
        if let Some(scale) = &self.neighborhood_scale {
            p.neighborhood_scale = match scale.as_str() {
                "absolute" => NeighborhoodScale::Absolute,
                "range-relative" => NeighborhoodScale::RangeRelative,
                other => bail!("unknown neighborhood_scale {other:?}"),
            };
        }
        Ok(p)
    }
}

impl ExperimentFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: Self = toml::from_str(text).context("malformed experiment file")?;
        if file.schema_version != SCHEMA_VERSION {
            bail!(
                "experiment file has schema_version {}, this build reads {SCHEMA_VERSION}",
                file.schema_version
            );
        }
        Ok(file)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }
}
