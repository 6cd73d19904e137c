//! Classifier zoo, reduction pipeline, evaluation metrics, and the top-3
//! selection protocol.

mod bayes;
mod linear;
mod metrics;
mod pca;
mod svm_dual;
mod trees;

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::corpus::{Label, Split, SplitAssignment};
use crate::textprep::TokenStream;
use crate::vocab::{
    build_list_a, build_list_b, min_frequency_for, vectorize, vectorize_tfidf,
    DocumentFrequencies, FeatureVector, FunctionWordList, VectorMode, Vocabulary,
};
use crate::{Error, Result};

pub use bayes::{fit_multinomial_nb, MultinomialNb};
pub use linear::{objective_and_gradient, solve, LinearModel, MarginLoss, SolveOptions};
pub use metrics::Metrics;
pub use pca::{fit_pca, inverse_transform_row, transform, transform_row, PcaModel};
pub use svm_dual::{solve_dual, DualOptions, KernelModel, PolyKernel};
pub use trees::{fit_bagged, fit_tree, BaggedTrees, BaggingOptions, TreeNode, TreeOptions};

/// Row-per-article feature matrix with labels and word-count provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureMatrix {
    pub ids: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub labels: Vec<Label>,
    pub word_count: u32,
}

impl FeatureMatrix {
    pub fn new(
        ids: Vec<String>,
        rows: Vec<Vec<f64>>,
        labels: Vec<Label>,
        word_count: u32,
    ) -> Result<FeatureMatrix> {
        if rows.len() != labels.len() || rows.len() != ids.len() {
            return Err(Error::InvalidConfig(
                "rows, labels and ids must have equal length".into(),
            ));
        }
        if let Some(first) = rows.first() {
            let d = first.len();
            for (i, row) in rows.iter().enumerate() {
                if row.len() != d {
                    return Err(Error::DimensionMismatch { expected: d, found: row.len() });
                }
                if let Some(j) = row.iter().position(|v| !v.is_finite()) {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(FeatureMatrix { ids, rows, labels, word_count })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.rows.first().map(|r| r.len()).unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassifierFamily {
    LinearSvm,
    QuadraticSvm,
    BaggedTrees,
    NaiveBayes,
    Logistic,
}

impl ClassifierFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassifierFamily::LinearSvm => "linear_svm",
            ClassifierFamily::QuadraticSvm => "quadratic_svm",
            ClassifierFamily::BaggedTrees => "bagged_trees",
            ClassifierFamily::NaiveBayes => "naive_bayes",
            ClassifierFamily::Logistic => "logistic",
        }
    }

    pub fn parse(s: &str) -> Result<ClassifierFamily> {
        match s {
            "linear_svm" => Ok(ClassifierFamily::LinearSvm),
            "quadratic_svm" => Ok(ClassifierFamily::QuadraticSvm),
            "bagged_trees" => Ok(ClassifierFamily::BaggedTrees),
            "naive_bayes" => Ok(ClassifierFamily::NaiveBayes),
            "logistic" => Ok(ClassifierFamily::Logistic),
            other => Err(Error::InvalidConfig(format!("unknown classifier family `{other}`"))),
        }
    }

    fn allowed_hyperparams(&self) -> &'static [&'static str] {
        match self {
            ClassifierFamily::LinearSvm | ClassifierFamily::Logistic => {
                &["c", "tol", "max_iter"]
            }
            ClassifierFamily::QuadraticSvm => &["c", "gamma", "coef0", "tol", "max_passes"],
            ClassifierFamily::BaggedTrees => &["b", "max_depth", "min_leaf", "bootstrap"],
            ClassifierFamily::NaiveBayes => &["alpha"],
        }
    }
}

/// A classifier family plus validated hyperparameters and a seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifierSpec {
    pub family: ClassifierFamily,
    pub hyperparams: BTreeMap<String, f64>,
    pub seed: u64,
}

impl ClassifierSpec {
    pub fn new(
        family: ClassifierFamily,
        hyperparams: BTreeMap<String, f64>,
        seed: u64,
    ) -> Result<ClassifierSpec> {
        let allowed = family.allowed_hyperparams();
        for (key, &value) in &hyperparams {
            if !allowed.contains(&key.as_str()) {
                return Err(Error::InvalidConfig(format!(
                    "{}: unknown hyperparameter `{key}`",
                    family.as_str()
                )));
            }
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "{}: hyperparameter `{key}` must be finite and nonnegative",
                    family.as_str()
                )));
            }
        }
        Ok(ClassifierSpec { family, hyperparams, seed })
    }

    pub fn param(&self, key: &str, default: f64) -> f64 {
        self.hyperparams.get(key).copied().unwrap_or(default)
    }

    /// Stable display name used for ranking tiebreaks and reports.
    pub fn name(&self) -> String {
        if self.hyperparams.is_empty() {
            self.family.as_str().to_string()
        } else {
            let params: Vec<String> = self
                .hyperparams
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            format!("{}({})", self.family.as_str(), params.join(","))
        }
    }
}

/// Per-column standardization fitted on the training split.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scaler {
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
}

impl Scaler {
    pub fn fit(rows: &[Vec<f64>]) -> Scaler {
        let n = rows.len() as f64;
        let d = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut mean = vec![0.0; d];
        for row in rows {
            for (m, v) in mean.iter_mut().zip(row) {
                *m += v;
            }
        }
        for m in mean.iter_mut() {
            *m /= n;
        }
        let mut var = vec![0.0; d];
        for row in rows {
            for ((s, v), m) in var.iter_mut().zip(row).zip(&mean) {
                *s += (v - m) * (v - m);
            }
        }
        let std = var
            .iter()
            .map(|&s| {
                let sd = (s / (n - 1.0).max(1.0)).sqrt();
                if sd < 1e-12 {
                    1.0
                } else {
                    sd
                }
            })
            .collect();
        Scaler { mean, std }
    }

    pub fn apply_row(&self, row: &[f64]) -> Vec<f64> {
        row.iter()
            .zip(&self.mean)
            .zip(&self.std)
            .map(|((v, m), s)| (v - m) / s)
            .collect()
    }

    pub fn apply(&self, rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
        rows.iter().map(|r| self.apply_row(r)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum FittedParams {
    Linear(LinearModel),
    Kernel(KernelModel),
    Trees(BaggedTrees),
    Bayes(MultinomialNb),
}

/// A fitted classifier with its attached reduction and scaling
/// transforms. Predicts only on vectors carrying the vocabulary
/// fingerprint and word count it was trained with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainedClassifier {
    pub spec: ClassifierSpec,
    pub pca: Option<PcaModel>,
    pub scaler: Option<Scaler>,
    pub params: FittedParams,
    pub vocab_fingerprint: String,
    pub word_count: u32,
}

#[derive(Debug, Clone, Copy)]
pub struct TrainOptions {
    /// `None` disables component reduction (`--no-reduce`).
    pub variance_retained: Option<f64>,
}

impl Default for TrainOptions {
    fn default() -> Self {
        TrainOptions { variance_retained: Some(0.95) }
    }
}

fn signed_labels(labels: &[Label]) -> Vec<f64> {
    labels
        .iter()
        .map(|l| if *l == Label::Fake { 1.0 } else { -1.0 })
        .collect()
}

/// Train one spec on a feature matrix. Naive Bayes consumes raw counts
/// (a multinomial model is undefined on component scores); margin models
/// standardize their inputs; trees use unscaled component scores.
pub fn train_classifier(
    spec: &ClassifierSpec,
    train: &FeatureMatrix,
    opts: &TrainOptions,
    vocab_fingerprint: &str,
) -> Result<TrainedClassifier> {
    if train.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let first = train.labels[0];
    if train.labels.iter().all(|&l| l == first) {
        return Err(Error::SingleClass);
    }
    let y = signed_labels(&train.labels);

    let reduce = opts.variance_retained.is_some() && spec.family != ClassifierFamily::NaiveBayes;
    let pca = if reduce {
        Some(fit_pca(&train.rows, opts.variance_retained.unwrap())?)
    } else {
        None
    };
    let reduced: Vec<Vec<f64>> = match &pca {
        Some(p) => transform(p, &train.rows)?,
        None => train.rows.clone(),
    };

    let needs_scaling = matches!(
        spec.family,
        ClassifierFamily::LinearSvm | ClassifierFamily::QuadraticSvm | ClassifierFamily::Logistic
    );
    let scaler = needs_scaling.then(|| Scaler::fit(&reduced));
    let features = match &scaler {
        Some(s) => s.apply(&reduced),
        None => reduced,
    };

    let params = match spec.family {
        ClassifierFamily::LinearSvm => FittedParams::Linear(solve(
            &features,
            &y,
            MarginLoss::SmoothedHinge,
            &SolveOptions {
                cost: spec.param("c", 1.0),
                tolerance: spec.param("tol", 1e-6),
                max_iterations: spec.param("max_iter", 50_000.0) as usize,
            },
        )),
        ClassifierFamily::Logistic => FittedParams::Linear(solve(
            &features,
            &y,
            MarginLoss::Logistic,
            &SolveOptions {
                cost: spec.param("c", 1.0),
                tolerance: spec.param("tol", 1e-6),
                max_iterations: spec.param("max_iter", 50_000.0) as usize,
            },
        )),
        ClassifierFamily::QuadraticSvm => FittedParams::Kernel(solve_dual(
            &features,
            &y,
            PolyKernel {
                gamma: spec.param("gamma", 1.0),
                coef0: spec.param("coef0", 1.0),
                degree: 2,
            },
            &DualOptions {
                cost: spec.param("c", 1.0),
                tolerance: spec.param("tol", 1e-6),
                max_passes: spec.param("max_passes", 1000.0) as usize,
            },
        )),
        ClassifierFamily::BaggedTrees => FittedParams::Trees(fit_bagged(
            &features,
            &y,
            &BaggingOptions {
                n_trees: spec.param("b", 50.0) as usize,
                bootstrap: spec.param("bootstrap", 1.0) != 0.0,
                tree: TreeOptions {
                    max_depth: spec.param("max_depth", 10.0) as usize,
                    min_leaf: (spec.param("min_leaf", 2.0) as usize).max(1),
                },
                seed: spec.seed,
            },
        )),
        ClassifierFamily::NaiveBayes => {
            if features.iter().any(|r| r.iter().any(|&v| v < 0.0)) {
                return Err(Error::InvalidConfig(
                    "naive_bayes requires nonnegative count features".into(),
                ));
            }
            FittedParams::Bayes(fit_multinomial_nb(&features, &y, spec.param("alpha", 1.0)))
        }
    };

    Ok(TrainedClassifier {
        spec: spec.clone(),
        pca,
        scaler,
        params,
        vocab_fingerprint: vocab_fingerprint.to_string(),
        word_count: train.word_count,
    })
}

impl TrainedClassifier {
    fn score_raw(&self, row: &[f64]) -> Result<f64> {
        let reduced = match &self.pca {
            Some(p) => transform_row(p, row)?,
            None => row.to_vec(),
        };
        let features = match &self.scaler {
            Some(s) => s.apply_row(&reduced),
            None => reduced,
        };
        Ok(match &self.params {
            FittedParams::Linear(m) => m.score(&features),
            FittedParams::Kernel(m) => m.score(&features),
            FittedParams::Trees(m) => m.score(&features),
            FittedParams::Bayes(m) => m.score(&features),
        })
    }

    /// Label plus signed score. Zero scores break toward credible.
    pub fn predict(&self, v: &FeatureVector, vocab_fingerprint: &str) -> Result<(Label, f64)> {
        if vocab_fingerprint != self.vocab_fingerprint {
            return Err(Error::FingerprintMismatch {
                expected: self.vocab_fingerprint.clone(),
                found: vocab_fingerprint.to_string(),
            });
        }
        let score = self.score_raw(&v.values)?;
        let label = if score > 0.0 { Label::Fake } else { Label::Credible };
        Ok((label, score))
    }

    pub fn evaluate(&self, m: &FeatureMatrix, vocab_fingerprint: &str) -> Result<Metrics> {
        if m.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        if m.word_count != self.word_count {
            return Err(Error::WordCountMismatch {
                doc_x: m.word_count,
                vocab_x: self.word_count,
            });
        }
        let mut predicted = Vec::with_capacity(m.len());
        for (id, row) in m.ids.iter().zip(&m.rows) {
            let v = FeatureVector { id: id.clone(), values: row.clone() };
            predicted.push(self.predict(&v, vocab_fingerprint)?.0);
        }
        Ok(Metrics::from_predictions(&predicted, &m.labels))
    }

    /// Versioned header line plus exact JSON parameters.
    pub fn write<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(
            w,
            "veracity-model v1 family={} x={} fingerprint={} k={}",
            self.spec.family.as_str(),
            self.word_count,
            self.vocab_fingerprint,
            self.pca.as_ref().map(|p| p.output_dim()).unwrap_or(0),
        )?;
        serde_json::to_writer(&mut w, self)?;
        writeln!(w)?;
        Ok(())
    }

    pub fn read<R: BufRead>(mut r: R) -> Result<TrainedClassifier> {
        let mut header = String::new();
        r.read_line(&mut header)?;
        if !header.starts_with("veracity-model v1 ") {
            return Err(Error::MalformedFile {
                what: "model".into(),
                line: 1,
                detail: "unknown model format version".into(),
            });
        }
        let mut body = String::new();
        r.read_to_string(&mut body)?;
        Ok(serde_json::from_str(&body)?)
    }
}

/// One prepared article on the classification path.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PreppedDoc {
    pub id: String,
    pub label: Label,
    pub tokens: TokenStream,
}

/// Settings shared by `select_model` and the CLI train/select stages.
#[derive(Debug, Clone)]
pub struct SelectSettings {
    pub cap: usize,
    /// Overrides the built-in per-word-count minimum frequency when set.
    pub min_freq: Option<u64>,
    pub variance_retained: Option<f64>,
    pub vector_mode: VectorMode,
    pub top_k: usize,
}

impl Default for SelectSettings {
    fn default() -> Self {
        SelectSettings {
            cap: 1000,
            min_freq: None,
            variance_retained: Some(0.95),
            vector_mode: VectorMode::Count,
            top_k: 3,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LeaderboardEntry {
    pub spec_name: String,
    pub family: ClassifierFamily,
    pub validation: Metrics,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FinalistEntry {
    pub spec_name: String,
    pub family: ClassifierFamily,
    pub validation: Metrics,
    pub test: Metrics,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct XSelection {
    pub word_count: u32,
    pub vocab_len: usize,
    pub reduced_dim: usize,
    /// All specs ranked by validation accuracy (ties: F1, then name).
    pub leaderboard: Vec<LeaderboardEntry>,
    /// Specs whose training failed, with the error text.
    pub failures: Vec<(String, String)>,
    /// Test metrics exist only for the validation top-k.
    pub finalists: Vec<FinalistEntry>,
    pub winner: FinalistEntry,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SelectionReport {
    pub per_word_count: Vec<XSelection>,
    pub winner_word_count: u32,
    pub winner: FinalistEntry,
}

/// Vectorized splits for one X, built train-first so nothing leaks.
pub struct VectorizedSplits {
    pub vocab: Vocabulary,
    pub train: FeatureMatrix,
    pub validation: FeatureMatrix,
    pub test: FeatureMatrix,
}

/// Build the vocabulary on the training split only, then vectorize all
/// three splits with it.
pub fn vectorize_splits(
    docs: &[PreppedDoc],
    split: &SplitAssignment,
    word_count: u32,
    settings: &SelectSettings,
    stopwords: &FunctionWordList,
) -> Result<VectorizedSplits> {
    let mut train_docs: Vec<&PreppedDoc> = Vec::new();
    let mut val_docs: Vec<&PreppedDoc> = Vec::new();
    let mut test_docs: Vec<&PreppedDoc> = Vec::new();
    for doc in docs {
        match split.assignments.get(&doc.id) {
            Some(Split::Train) => train_docs.push(doc),
            Some(Split::Validation) => val_docs.push(doc),
            Some(Split::Test) => test_docs.push(doc),
            None => {
                return Err(Error::UnknownId(doc.id.clone()));
            }
        }
    }
    let train_streams: Vec<TokenStream> = train_docs.iter().map(|d| d.tokens.clone()).collect();
    let list_a = build_list_a(&train_streams)?;
    let min_freq = match settings.min_freq {
        Some(m) => m,
        None => min_frequency_for(word_count)?,
    };
    let vocab = build_list_b(&list_a, min_freq, stopwords, settings.cap, word_count)?;
    let df = matches!(settings.vector_mode, VectorMode::Tfidf)
        .then(|| DocumentFrequencies::from_docs(&train_streams, &vocab));

    let to_matrix = |docs: &[&PreppedDoc]| -> Result<FeatureMatrix> {
        let mut ids = Vec::with_capacity(docs.len());
        let mut rows = Vec::with_capacity(docs.len());
        let mut labels = Vec::with_capacity(docs.len());
        for doc in docs {
            let v = match &df {
                Some(df) => vectorize_tfidf(&doc.id, &doc.tokens, word_count, &vocab, df)?,
                None => vectorize(&doc.id, &doc.tokens, word_count, &vocab)?,
            };
            ids.push(doc.id.clone());
            rows.push(v.values);
            labels.push(doc.label);
        }
        FeatureMatrix::new(ids, rows, labels, word_count)
    };

    Ok(VectorizedSplits {
        train: to_matrix(&train_docs)?,
        validation: to_matrix(&val_docs)?,
        test: to_matrix(&test_docs)?,
        vocab,
    })
}

fn rank_key(m: &Metrics, name: &str) -> (std::cmp::Reverse<u64>, std::cmp::Reverse<u64>, String) {
    // total order on (accuracy desc, f1 desc, name asc); metrics are in
    // [0,1] so the bit patterns of the nonnegative floats order correctly
    (
        std::cmp::Reverse(m.accuracy.to_bits()),
        std::cmp::Reverse(m.f1.to_bits()),
        name.to_string(),
    )
}

/// The full protocol: per word count, build vocabulary and reduction on
/// the training split, fit every spec, rank on validation, give only the
/// top-k a test run, and pick the overall winner by test accuracy.
pub fn select_model(
    zoo: &[ClassifierSpec],
    prepped: &BTreeMap<u32, Vec<PreppedDoc>>,
    split: &SplitAssignment,
    settings: &SelectSettings,
    stopwords: &FunctionWordList,
) -> Result<SelectionReport> {
    if zoo.len() < 3 {
        return Err(Error::InvalidConfig("zoo must contain at least 3 specs".into()));
    }
    let mut per_word_count = Vec::new();
    for (&x, docs) in prepped {
        let splits = vectorize_splits(docs, split, x, settings, stopwords)?;
        let fingerprint = splits.vocab.fingerprint();

        // one reduction per X, shared by every spec that wants it
        let shared_pca = match settings.variance_retained {
            Some(v) => Some(fit_pca(&splits.train.rows, v)?),
            None => None,
        };
        let reduced_train = match &shared_pca {
            Some(p) => FeatureMatrix {
                ids: splits.train.ids.clone(),
                rows: transform(p, &splits.train.rows)?,
                labels: splits.train.labels.clone(),
                word_count: x,
            },
            None => splits.train.clone(),
        };
        let no_reduce = TrainOptions { variance_retained: None };

        let mut ranked: Vec<(LeaderboardEntry, TrainedClassifier)> = Vec::new();
        let mut failures = Vec::new();
        for spec in zoo {
            let trained = if spec.family == ClassifierFamily::NaiveBayes {
                train_classifier(spec, &splits.train, &no_reduce, &fingerprint)
            } else {
                train_classifier(spec, &reduced_train, &no_reduce, &fingerprint).map(|mut m| {
                    m.pca = shared_pca.clone();
                    m
                })
            };
            match trained
                .and_then(|m| m.evaluate(&splits.validation, &fingerprint).map(|v| (m, v)))
            {
                Ok((model, validation)) => ranked.push((
                    LeaderboardEntry {
                        spec_name: spec.name(),
                        family: spec.family,
                        validation,
                    },
                    model,
                )),
                Err(e) => failures.push((spec.name(), e.to_string())),
            }
        }
        if ranked.is_empty() {
            return Err(Error::InvalidConfig(format!(
                "every spec failed to train at X={x}"
            )));
        }
        ranked.sort_by_key(|(entry, _)| rank_key(&entry.validation, &entry.spec_name));

        let mut finalists = Vec::new();
        for (entry, model) in ranked.iter().take(settings.top_k) {
            let test = model.evaluate(&splits.test, &fingerprint)?;
            finalists.push(FinalistEntry {
                spec_name: entry.spec_name.clone(),
                family: entry.family,
                validation: entry.validation,
                test,
            });
        }
        let winner = finalists
            .iter()
            .min_by_key(|f| rank_key(&f.test, &f.spec_name))
            .cloned()
            .expect("top-k is non-empty");

        let reduced_dim = shared_pca
            .as_ref()
            .map(|p| p.output_dim())
            .unwrap_or(splits.vocab.len());
        per_word_count.push(XSelection {
            word_count: x,
            vocab_len: splits.vocab.len(),
            reduced_dim,
            leaderboard: ranked.into_iter().map(|(e, _)| e).collect(),
            failures,
            finalists,
            winner,
        });
    }
    let best = per_word_count
        .iter()
        .min_by_key(|x| rank_key(&x.winner.test, &format!("{:03}{}", x.word_count, x.winner.spec_name)))
        .expect("at least one word count");
    Ok(SelectionReport {
        winner_word_count: best.word_count,
        winner: best.winner.clone(),
        per_word_count,
    })
}

/// The stock zoo: 21 specs across the five families.
pub fn default_zoo(seed: u64) -> Vec<ClassifierSpec> {
    let mut zoo = Vec::new();
    let mut push = |family, params: &[(&str, f64)]| {
        let map: BTreeMap<String, f64> = params
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
        zoo.push(ClassifierSpec::new(family, map, seed).expect("stock spec is valid"));
    };
    for c in [0.03, 0.1, 0.3, 1.0, 3.0, 10.0] {
        push(ClassifierFamily::LinearSvm, &[("c", c)]);
    }
    for c in [0.03, 0.1, 1.0, 10.0] {
        push(ClassifierFamily::QuadraticSvm, &[("c", c)]);
    }
    for c in [0.1, 0.3, 1.0, 3.0] {
        push(ClassifierFamily::Logistic, &[("c", c)]);
    }
    push(ClassifierFamily::BaggedTrees, &[("b", 50.0), ("max_depth", 10.0)]);
    push(ClassifierFamily::BaggedTrees, &[("b", 25.0), ("max_depth", 10.0)]);
    push(ClassifierFamily::BaggedTrees, &[("b", 50.0), ("max_depth", 6.0)]);
    push(ClassifierFamily::BaggedTrees, &[("b", 25.0), ("max_depth", 6.0)]);
    push(ClassifierFamily::BaggedTrees, &[("b", 50.0), ("max_depth", 14.0), ("min_leaf", 5.0)]);
    push(ClassifierFamily::NaiveBayes, &[("alpha", 0.5)]);
    push(ClassifierFamily::NaiveBayes, &[("alpha", 1.0)]);
    zoo
}
