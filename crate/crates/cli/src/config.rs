//! Run configuration: a flat TOML file merged with command-line overrides,
//! validated up front, and copied verbatim into the output directory so a
//! run is always reproducible from its artifacts alone.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use veracity::model::{ClassifierFamily, ClassifierSpec, SelectSettings};
use veracity::vocab::VectorMode;

pub const ALLOWED_WORD_COUNTS: [u32; 4] = [30, 60, 90, 120];

/// On-disk shape of the config file. Every field except `corpus` and `seed`
/// has a default; `seed` may instead come from `--seed`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Path to the raw corpus (JSONL, CSV, or a directory tree).
    pub corpus: PathBuf,
    /// Leading word counts (X) to process; subset of {30, 60, 90, 120}.
    #[serde(default = "default_words")]
    pub words: Vec<u32>,
    /// Overrides the published per-X minimum frequency when set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_freq: Option<u64>,
    /// Vocabulary size ceiling (List B).
    #[serde(default = "default_cap")]
    pub cap: usize,
    /// Retained-variance level for component reduction; `--no-reduce`
    /// disables reduction entirely.
    #[serde(default = "default_variance")]
    pub variance_retained: f64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub no_reduce: bool,
    /// Train/validation/test fractions.
    #[serde(default = "default_split")]
    pub split: [f64; 3],
    /// Seed for every stochastic step. Mandatory: either here or `--seed`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Classifier zoo, one spec per entry: `family key=value ...`.
    #[serde(default = "default_zoo")]
    pub zoo: Vec<String>,
    #[serde(default = "default_vector_mode")]
    pub vector_mode: String,
    /// Finalists given a test-set run during selection.
    #[serde(default = "default_top_k")]
    pub top_k: usize,
    /// Output directory; every artifact lands here.
    #[serde(default = "default_out")]
    pub out: PathBuf,
}

fn default_words() -> Vec<u32> {
    ALLOWED_WORD_COUNTS.to_vec()
}

fn default_cap() -> usize {
    1000
}

fn default_variance() -> f64 {
    0.95
}

fn default_split() -> [f64; 3] {
    [0.6, 0.2, 0.2]
}

fn default_vector_mode() -> String {
    "count".into()
}

fn default_top_k() -> usize {
    3
}

fn default_out() -> PathBuf {
    PathBuf::from("out")
}

fn default_zoo() -> Vec<String> {
    vec![
        "linear_svm c=1".into(),
        "quadratic_svm c=1".into(),
        "logistic c=1".into(),
        "bagged_trees b=25 max_depth=10".into(),
        "naive_bayes alpha=1".into(),
    ]
}

/// Command-line overrides shared by every subcommand.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub words: Option<u32>,
    pub out: Option<PathBuf>,
    pub no_reduce: bool,
    pub vector_mode: Option<String>,
}

impl RunConfig {
    pub fn load(path: &Path, overrides: &Overrides) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        let mut config: RunConfig = toml::from_str(&text)
            .with_context(|| format!("config file {} is not valid TOML", path.display()))?;
        if let Some(seed) = overrides.seed {
            config.seed = Some(seed);
        }
        if let Some(words) = overrides.words {
            config.words = vec![words];
        }
        if let Some(out) = &overrides.out {
            config.out = out.clone();
        }
        if overrides.no_reduce {
            config.no_reduce = true;
        }
        if let Some(mode) = &overrides.vector_mode {
            config.vector_mode = mode.clone();
        }
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.words.is_empty() {
            bail!("config: `words` must name at least one word count");
        }
        for &x in &self.words {
            if !ALLOWED_WORD_COUNTS.contains(&x) {
                bail!("config: word count {x} is not one of 30, 60, 90, 120");
            }
        }
        let mut sorted = self.words.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.words.len() {
            bail!("config: `words` contains duplicates");
        }
        if self.seed.is_none() {
            bail!("config: a seed is mandatory; set `seed` or pass --seed");
        }
        if self.cap == 0 {
            bail!("config: `cap` must be positive");
        }
        if !(0.0 < self.variance_retained && self.variance_retained <= 1.0) {
            bail!(
                "config: `variance_retained` must be in (0, 1], got {}",
                self.variance_retained
            );
        }
        let sum: f64 = self.split.iter().sum();
        if (sum - 1.0).abs() > 1e-9 || self.split.iter().any(|&f| f < 0.0) || self.split[0] <= 0.0
        {
            bail!("config: `split` fractions must be nonnegative and sum to 1");
        }
        if self.zoo.is_empty() {
            bail!("config: `zoo` must list at least one classifier spec");
        }
        self.parsed_zoo()?;
        VectorMode::parse(&self.vector_mode)
            .with_context(|| format!("config: bad `vector_mode` `{}`", self.vector_mode))?;
        Ok(())
    }

    pub fn seed(&self) -> u64 {
        self.seed.expect("validated config has a seed")
    }

    pub fn vector_mode(&self) -> VectorMode {
        VectorMode::parse(&self.vector_mode).expect("validated config has a vector mode")
    }

    pub fn variance(&self) -> Option<f64> {
        if self.no_reduce {
            None
        } else {
            Some(self.variance_retained)
        }
    }

    pub fn select_settings(&self) -> SelectSettings {
        SelectSettings {
            cap: self.cap,
            min_freq: self.min_freq,
            variance_retained: self.variance(),
            vector_mode: self.vector_mode(),
            top_k: self.top_k,
        }
    }

    /// Parse the `zoo` entries into validated classifier specs.
    pub fn parsed_zoo(&self) -> Result<Vec<ClassifierSpec>> {
        self.zoo
            .iter()
            .map(|entry| parse_spec(entry, self.seed.unwrap_or(0)))
            .collect()
    }

    /// Write the resolved config into the output directory.
    pub fn write_copy(&self) -> Result<()> {
        std::fs::create_dir_all(&self.out)
            .with_context(|| format!("cannot create output directory {}", self.out.display()))?;
        let text = toml::to_string_pretty(self).context("serializing resolved config")?;
        std::fs::write(self.out.join("config.toml"), text)
            .context("writing config copy into the output directory")?;
        Ok(())
    }
}

/// Parse one zoo entry: a family name followed by `key=value` pairs, e.g.
/// `bagged_trees b=25 max_depth=10`.
fn parse_spec(entry: &str, seed: u64) -> Result<ClassifierSpec> {
    let mut parts = entry.split_whitespace();
    let family_name = parts
        .next()
        .with_context(|| format!("empty zoo entry `{entry}`"))?;
    let family = ClassifierFamily::parse(family_name)
        .with_context(|| format!("zoo entry `{entry}`: unknown family"))?;
    let mut hyperparams = BTreeMap::new();
    for pair in parts {
        let (key, value) = pair
            .split_once('=')
            .with_context(|| format!("zoo entry `{entry}`: expected key=value, got `{pair}`"))?;
        let value: f64 = value
            .parse()
            .with_context(|| format!("zoo entry `{entry}`: `{key}` is not a number"))?;
        hyperparams.insert(key.to_string(), value);
    }
    ClassifierSpec::new(family, hyperparams, seed)
        .with_context(|| format!("zoo entry `{entry}` failed validation"))
}
