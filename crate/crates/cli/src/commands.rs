//! One function per subcommand. Each consumes prior-stage artifacts by
//! path, writes its own outputs into the configured directory, and never
//! touches its inputs.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use veracity::corpus::{
    remove_boilerplate, split_corpus, BoilerplateFilter, Corpus, CorpusFormat, Label,
    Split, DEFAULT_BOILERPLATE_PATTERNS,
};
use veracity::linguistic::{
    corpus_profile, tone_summary, CorpusProfile, Lexicons, SentimentClass,
};
use veracity::model::{
    select_model, train_classifier, FeatureMatrix, Metrics, PreppedDoc, TrainOptions,
    TrainedClassifier,
};
use veracity::stats::{
    chi_square_independence, influential_words, two_proportion_z, two_sample_z,
    ContingencyTable, TestResult,
};
use veracity::textprep::{prepare, PrepConfig};
use veracity::vocab::{
    build_list_a, build_list_b, min_frequency_for, vectorize, vectorize_tfidf,
    DocumentFrequencies, FunctionWordList, VectorMode, Vocabulary, WordCounts,
};

use crate::artifacts::*;
use crate::config::RunConfig;

fn default_filter() -> BoilerplateFilter {
    let patterns: Vec<String> =
        DEFAULT_BOILERPLATE_PATTERNS.iter().map(|s| s.to_string()).collect();
    BoilerplateFilter::new(&patterns).expect("stock patterns compile")
}

fn infer_format(path: &Path) -> Result<CorpusFormat> {
    if path.is_dir() {
        return Ok(CorpusFormat::DirectoryTree);
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("jsonl") => Ok(CorpusFormat::Jsonl),
        Some("csv") => Ok(CorpusFormat::Csv),
        other => bail!(
            "cannot infer corpus format of {} (extension {:?}); use .jsonl, .csv or a directory",
            path.display(),
            other
        ),
    }
}

/// `ingest`: normalize the raw corpus and freeze the split assignment.
pub fn ingest(config: &RunConfig) -> Result<()> {
    let format = infer_format(&config.corpus)?;
    let corpus = veracity::corpus::ingest_corpus(&config.corpus, format)
        .with_context(|| format!("ingesting {}", config.corpus.display()))?;
    let counts = corpus.label_counts();

    let mut w = BufWriter::new(File::create(corpus_path(&config.out))?);
    corpus.write_jsonl(&mut w)?;
    w.flush()?;

    let (f_train, f_val, f_test) = (config.split[0], config.split[1], config.split[2]);
    let split = split_corpus(&corpus, (f_train, f_val, f_test), config.seed())?;
    let mut w = BufWriter::new(File::create(split_path(&config.out))?);
    split.write(&mut w)?;
    w.flush()?;

    println!(
        "ingest: {} articles ({} fake, {} credible), split written",
        corpus.len(),
        counts.get(&Label::Fake).copied().unwrap_or(0),
        counts.get(&Label::Credible).copied().unwrap_or(0)
    );
    Ok(())
}

/// `prep`: extract, de-boilerplate, clean, stem and truncate every article
/// at each configured word count.
pub fn prep(config: &RunConfig) -> Result<()> {
    let corpus = load_corpus(&config.out)?;
    let filter = default_filter();
    for &x in &config.words {
        let prep_config = PrepConfig::new(x)?;
        let docs: Vec<PreppedDoc> = corpus
            .articles
            .iter()
            .map(|a| PreppedDoc {
                id: a.id.clone(),
                label: a.label,
                tokens: prepare(&remove_boilerplate(&a.body(), &filter), &prep_config),
            })
            .collect();
        write_prep(&prep_path(&config.out, x), &docs)?;
        println!("prep: {} documents cached at X={x}", docs.len());
    }
    Ok(())
}

/// `vocab`: build List A on the training split and derive List B per X.
pub fn vocab(config: &RunConfig) -> Result<()> {
    let corpus = load_corpus(&config.out)?;
    let split = load_split(&config.out)?;
    let stopwords = FunctionWordList::builtin();
    for &x in &config.words {
        let docs = load_prepped(&config.out, x, &corpus)?;
        let train_streams: Vec<_> = docs
            .iter()
            .filter(|d| split.assignments.get(&d.id) == Some(&Split::Train))
            .map(|d| d.tokens.clone())
            .collect();
        if train_streams.is_empty() {
            bail!("no training documents at X={x}; was the split built on this corpus?");
        }
        let list_a = build_list_a(&train_streams)?;
        let min_freq = match config.min_freq {
            Some(m) => m,
            None => min_frequency_for(x)?,
        };
        let vocabulary = build_list_b(&list_a, min_freq, &stopwords, config.cap, x)?;
        let mut w = BufWriter::new(File::create(vocab_path(&config.out, x))?);
        vocabulary.write(&mut w)?;
        w.flush()?;
        println!(
            "vocab: X={x}: {} stems (min_freq {min_freq}, cap {})",
            vocabulary.len(),
            config.cap
        );
    }
    Ok(())
}

struct SplitMatrices {
    vocab: Vocabulary,
    train: FeatureMatrix,
    validation: FeatureMatrix,
    test: FeatureMatrix,
}

/// Vectorize all three splits against the stored vocabulary artifact.
fn build_matrices(config: &RunConfig, x: u32, corpus: &Corpus) -> Result<SplitMatrices> {
    let split = load_split(&config.out)?;
    let vocabulary = load_vocab(&config.out, x)?;
    let docs = load_prepped(&config.out, x, corpus)?;

    let mut by_split: BTreeMap<Split, Vec<&PreppedDoc>> = BTreeMap::new();
    for doc in &docs {
        let assignment = split
            .assignments
            .get(&doc.id)
            .with_context(|| format!("document {} has no split assignment", doc.id))?;
        by_split.entry(*assignment).or_default().push(doc);
    }
    let train_docs = by_split.remove(&Split::Train).unwrap_or_default();
    let df = match config.vector_mode() {
        VectorMode::Tfidf => {
            let streams: Vec<_> = train_docs.iter().map(|d| d.tokens.clone()).collect();
            Some(DocumentFrequencies::from_docs(&streams, &vocabulary))
        }
        VectorMode::Count => None,
    };
    let matrix_of = |docs: &[&PreppedDoc]| -> Result<FeatureMatrix> {
        let mut ids = Vec::new();
        let mut rows = Vec::new();
        let mut labels = Vec::new();
        for doc in docs {
            let v = match &df {
                Some(df) => vectorize_tfidf(&doc.id, &doc.tokens, x, &vocabulary, df)?,
                None => vectorize(&doc.id, &doc.tokens, x, &vocabulary)?,
            };
            ids.push(doc.id.clone());
            rows.push(v.values);
            labels.push(doc.label);
        }
        Ok(FeatureMatrix::new(ids, rows, labels, x)?)
    };
    Ok(SplitMatrices {
        train: matrix_of(&train_docs)?,
        validation: matrix_of(&by_split.remove(&Split::Validation).unwrap_or_default())?,
        test: matrix_of(&by_split.remove(&Split::Test).unwrap_or_default())?,
        vocab: vocabulary,
    })
}

fn write_metrics_header(w: &mut impl Write) -> Result<()> {
    writeln!(w, "words,model,recall,f1,accuracy")?;
    Ok(())
}

fn write_metrics_row(
    w: &mut impl Write,
    words: u32,
    model: &str,
    metrics: &Metrics,
) -> Result<()> {
    writeln!(
        w,
        "{words},{model},{},{},{}",
        metrics.recall, metrics.f1, metrics.accuracy
    )?;
    Ok(())
}

/// `train`: fit every zoo spec per X and store the models plus their
/// validation metrics.
pub fn train(config: &RunConfig) -> Result<()> {
    let corpus = load_corpus(&config.out)?;
    let zoo = config.parsed_zoo()?;
    let opts = TrainOptions { variance_retained: config.variance() };
    let mut metrics_out =
        BufWriter::new(File::create(config.out.join("train_metrics.csv"))?);
    write_metrics_header(&mut metrics_out)?;
    for &x in &config.words {
        let matrices = build_matrices(config, x, &corpus)?;
        let fingerprint = matrices.vocab.fingerprint();
        let dir = models_dir(&config.out).join(x.to_string());
        std::fs::create_dir_all(&dir)?;
        for spec in &zoo {
            let model = train_classifier(spec, &matrices.train, &opts, &fingerprint)
                .with_context(|| format!("training {} at X={x}", spec.name()))?;
            let mut w =
                BufWriter::new(File::create(dir.join(model_file_name(&spec.name())))?);
            model.write(&mut w)?;
            w.flush()?;
            let validation = model.evaluate(&matrices.validation, &fingerprint)?;
            write_metrics_row(&mut metrics_out, x, &spec.name(), &validation)?;
        }
        println!("train: X={x}: {} models stored", zoo.len());
    }
    metrics_out.flush()?;
    Ok(())
}

/// `select`: run the model tournament, emit the leaderboard, and store the
/// winning model.
pub fn select(config: &RunConfig) -> Result<()> {
    let corpus = load_corpus(&config.out)?;
    let split = load_split(&config.out)?;
    let zoo = config.parsed_zoo()?;
    let mut prepped = BTreeMap::new();
    for &x in &config.words {
        prepped.insert(x, load_prepped(&config.out, x, &corpus)?);
    }
    let settings = config.select_settings();
    let report = select_model(&zoo, &prepped, &split, &settings, &FunctionWordList::builtin())?;

    let mut w = BufWriter::new(File::create(selection_path(&config.out))?);
    serde_json::to_writer_pretty(&mut w, &report)?;
    w.flush()?;

    let mut w = BufWriter::new(File::create(leaderboard_path(&config.out))?);
    write_metrics_header(&mut w)?;
    for selection in &report.per_word_count {
        write_metrics_row(
            &mut w,
            selection.word_count,
            &selection.winner.spec_name,
            &selection.winner.test,
        )?;
    }
    w.flush()?;

    // refit the overall winner so later stages can load it from disk
    let winner_x = report.winner_word_count;
    let winner_spec = zoo
        .iter()
        .find(|s| s.name() == report.winner.spec_name)
        .expect("winner comes from the zoo");
    let matrices = build_matrices(config, winner_x, &corpus)?;
    let opts = TrainOptions { variance_retained: settings.variance_retained };
    let model =
        train_classifier(winner_spec, &matrices.train, &opts, &matrices.vocab.fingerprint())?;
    std::fs::create_dir_all(models_dir(&config.out))?;
    let mut w = BufWriter::new(File::create(winner_model_path(&config.out))?);
    model.write(&mut w)?;
    w.flush()?;

    println!(
        "select: winner {} at X={winner_x} (test accuracy {})",
        report.winner.spec_name, report.winner.test.accuracy
    );
    Ok(())
}

/// `evaluate`: score a stored model on the held-out test split.
pub fn evaluate(config: &RunConfig, model_path: Option<&Path>) -> Result<()> {
    let path: PathBuf = match model_path {
        Some(p) => p.to_path_buf(),
        None => winner_model_path(&config.out),
    };
    let file = require(&path, "select")?;
    let model = TrainedClassifier::read(BufReader::new(file))
        .with_context(|| format!("reading model {}", path.display()))?;
    let corpus = load_corpus(&config.out)?;
    let x = model.word_count;
    let matrices = build_matrices(config, x, &corpus)?;
    let metrics = model.evaluate(&matrices.test, &matrices.vocab.fingerprint())?;

    let mut w = BufWriter::new(File::create(evaluation_path(&config.out))?);
    write_metrics_header(&mut w)?;
    write_metrics_row(&mut w, x, &model.spec.name(), &metrics)?;
    w.flush()?;
    println!(
        "evaluate: {} at X={x}: accuracy {}, recall {}, f1 {}",
        model.spec.name(),
        metrics.accuracy,
        metrics.recall,
        metrics.f1
    );
    Ok(())
}

fn stats_row(w: &mut impl Write, feature: &str, result: &TestResult) -> Result<()> {
    let df = result.df.map(|d| d.to_string()).unwrap_or_default();
    writeln!(w, "{feature},{},{df},{}", result.statistic, result.p_value)?;
    Ok(())
}

/// A feature whose test cannot be computed (for instance zero variance on
/// both sides) is reported with empty cells rather than dropped silently.
fn degenerate_row(w: &mut impl Write, feature: &str) -> Result<()> {
    writeln!(w, "{feature},,,")?;
    Ok(())
}

/// Tone bins for the chi-square rendering of the 0-100 summary variables.
fn tone_bins(values: &[f64]) -> [u64; 5] {
    let mut bins = [0u64; 5];
    for &v in values {
        let idx = ((v / 20.0).floor() as usize).min(4);
        bins[idx] += 1;
    }
    bins
}

fn binned_chi_square(fake: &[f64], credible: &[f64]) -> Option<TestResult> {
    let (fb, cb) = (tone_bins(fake), tone_bins(credible));
    let mut rows = vec![Vec::new(), Vec::new()];
    for i in 0..5 {
        if fb[i] + cb[i] == 0 {
            continue;
        }
        rows[0].push(fb[i]);
        rows[1].push(cb[i]);
    }
    if rows[0].len() < 2 {
        return None;
    }
    let table = ContingencyTable::new(rows).ok()?;
    chi_square_independence(&table).ok()
}

/// `analyze`: linguistic and distributional comparisons between the fake
/// and credible sides, one test per report line.
pub fn analyze(config: &RunConfig) -> Result<()> {
    let corpus = load_corpus(&config.out)?;
    let lexicons = Lexicons::builtin();
    let filter = default_filter();

    let mut profiles: BTreeMap<Label, CorpusProfile> = BTreeMap::new();
    let mut tones: BTreeMap<Label, (Vec<f64>, Vec<f64>)> = BTreeMap::new();
    for label in [Label::Fake, Label::Credible] {
        let bodies: Vec<String> = corpus
            .articles
            .iter()
            .filter(|a| a.label == label)
            .map(|a| remove_boilerplate(&a.body(), &filter))
            .collect();
        if bodies.is_empty() {
            bail!("corpus has no {} articles", label.as_str());
        }
        let refs: Vec<&str> = bodies.iter().map(|s| s.as_str()).collect();
        profiles.insert(label, corpus_profile(&refs, lexicons)?);
        let mut authenticity = Vec::new();
        let mut emotional = Vec::new();
        for body in &bodies {
            let tone = tone_summary(body, lexicons);
            authenticity.push(tone.authenticity);
            emotional.push(tone.emotional_tone);
        }
        tones.insert(label, (authenticity, emotional));
    }
    let fake = &profiles[&Label::Fake];
    let credible = &profiles[&Label::Credible];

    let mut w = BufWriter::new(File::create(stats_path(&config.out))?);
    writeln!(w, "feature,statistic,df,p")?;

    // part-of-speech rates
    use veracity::linguistic::PosTag;
    for tag in PosTag::ALL {
        let result = two_proportion_z(
            fake.pos.count(tag),
            fake.pos.total(),
            credible.pos.count(tag),
            credible.pos.total(),
        );
        match result {
            Ok(r) => stats_row(&mut w, &format!("pos_{}", tag.as_str()), &r)?,
            Err(_) => degenerate_row(&mut w, &format!("pos_{}", tag.as_str()))?,
        }
    }

    // sentence sentiment histogram
    let mut rows = vec![Vec::new(), Vec::new()];
    let mut kept_classes = Vec::new();
    for class in SentimentClass::ALL {
        let (f, c) = (fake.sentiment[class.index()], credible.sentiment[class.index()]);
        if f + c == 0 {
            continue;
        }
        rows[0].push(f);
        rows[1].push(c);
        kept_classes.push(class);
    }
    let sentiment = if rows[0].len() >= 2 {
        ContingencyTable::new(rows).ok().and_then(|t| chi_square_independence(&t).ok())
    } else {
        None
    };
    match sentiment {
        Some(r) => stats_row(&mut w, "sentiment_histogram", &r)?,
        None => degenerate_row(&mut w, "sentiment_histogram")?,
    }

    // word and sentence lengths
    let fl = fake.length_stats();
    let cl = credible.length_stats();
    for (feature, f_mean, f_sd, f_n, c_mean, c_sd, c_n) in [
        (
            "word_length",
            fl.word_mean,
            fl.word_std,
            fl.word_samples,
            cl.word_mean,
            cl.word_std,
            cl.word_samples,
        ),
        (
            "sentence_length",
            fl.sentence_mean,
            fl.sentence_std,
            fl.sentence_samples,
            cl.sentence_mean,
            cl.sentence_std,
            cl.sentence_samples,
        ),
    ] {
        match two_sample_z(f_mean, f_sd, f_n, c_mean, c_sd, c_n) {
            Ok(r) => stats_row(&mut w, feature, &r)?,
            Err(_) => degenerate_row(&mut w, feature)?,
        }
    }

    // tone summaries, both as z-tests and as binned chi-squares
    let (fake_auth, fake_emot) = &tones[&Label::Fake];
    let (cred_auth, cred_emot) = &tones[&Label::Credible];
    let (fa_mean, fa_sd, fa_n) = fake.authenticity_stats();
    let (ca_mean, ca_sd, ca_n) = credible.authenticity_stats();
    match two_sample_z(fa_mean, fa_sd, fa_n, ca_mean, ca_sd, ca_n) {
        Ok(r) => stats_row(&mut w, "authenticity_z", &r)?,
        Err(_) => degenerate_row(&mut w, "authenticity_z")?,
    }
    let (fe_mean, fe_sd, fe_n) = fake.emotional_tone_stats();
    let (ce_mean, ce_sd, ce_n) = credible.emotional_tone_stats();
    match two_sample_z(fe_mean, fe_sd, fe_n, ce_mean, ce_sd, ce_n) {
        Ok(r) => stats_row(&mut w, "emotional_tone_z", &r)?,
        Err(_) => degenerate_row(&mut w, "emotional_tone_z")?,
    }
    match binned_chi_square(fake_auth, cred_auth) {
        Some(r) => stats_row(&mut w, "authenticity_chi_square", &r)?,
        None => degenerate_row(&mut w, "authenticity_chi_square")?,
    }
    match binned_chi_square(fake_emot, cred_emot) {
        Some(r) => stats_row(&mut w, "emotional_tone_chi_square", &r)?,
        None => degenerate_row(&mut w, "emotional_tone_chi_square")?,
    }

    // word distribution, at the largest configured word count
    let x = *config.words.iter().max().expect("validated config has words");
    let vocabulary = load_vocab(&config.out, x)?;
    let docs = load_prepped(&config.out, x, &corpus)?;
    let mut side_counts: BTreeMap<Label, WordCounts> = BTreeMap::new();
    for doc in &docs {
        let counts = side_counts.entry(doc.label).or_insert_with(WordCounts::new);
        for token in &doc.tokens.tokens {
            counts.add(token, 1);
        }
    }
    let fake_counts = side_counts.remove(&Label::Fake).unwrap_or_else(WordCounts::new);
    let cred_counts = side_counts.remove(&Label::Credible).unwrap_or_else(WordCounts::new);

    let mut table_rows = vec![Vec::new(), Vec::new()];
    for stem in vocabulary.stems() {
        let (f, c) = (fake_counts.get(stem), cred_counts.get(stem));
        if f + c == 0 {
            continue;
        }
        table_rows[0].push(f);
        table_rows[1].push(c);
    }
    let word_chi = if table_rows[0].len() >= 2 {
        ContingencyTable::new(table_rows).ok().and_then(|t| chi_square_independence(&t).ok())
    } else {
        None
    };
    match word_chi {
        Some(r) => stats_row(&mut w, "word_distribution_chi_square", &r)?,
        None => degenerate_row(&mut w, "word_distribution_chi_square")?,
    }

    let ranked = influential_words(&vocabulary, &fake_counts, &cred_counts, 20);
    match ranked.first() {
        Some((stem, _)) => {
            let result = two_proportion_z(
                fake_counts.get(stem),
                fake_counts.total(),
                cred_counts.get(stem),
                cred_counts.total(),
            );
            match result {
                Ok(r) => stats_row(&mut w, "word_distribution_top_word_z", &r)?,
                Err(_) => degenerate_row(&mut w, "word_distribution_top_word_z")?,
            }
        }
        None => degenerate_row(&mut w, "word_distribution_top_word_z")?,
    }
    w.flush()?;

    let mut w = BufWriter::new(File::create(influential_path(&config.out))?);
    writeln!(w, "rank,word,statistic")?;
    for (rank, (stem, z)) in ranked.iter().enumerate() {
        writeln!(w, "{},{stem},{z}", rank + 1)?;
    }
    w.flush()?;

    println!(
        "analyze: stats written ({} sentiment classes, {} influential words at X={x})",
        kept_classes.len(),
        ranked.len()
    );
    Ok(())
}

fn read_artifact(path: &Path, producer: &str) -> Result<String> {
    let mut text = String::new();
    use std::io::Read;
    require(path, producer)?.read_to_string(&mut text)?;
    Ok(text)
}

/// `report`: a single human-readable digest assembled purely from stored
/// artifacts, so regenerating it can never change it.
pub fn report(config: &RunConfig) -> Result<()> {
    let leaderboard = read_artifact(&leaderboard_path(&config.out), "select")?;
    let stats = read_artifact(&stats_path(&config.out), "analyze")?;
    let influential = read_artifact(&influential_path(&config.out), "analyze")?;

    let mut text = String::new();
    text.push_str("veracity run report\n");
    text.push_str("===================\n\n");
    text.push_str(&format!(
        "seed: {}\nword counts: {:?}\nvector mode: {}\n\n",
        config.seed(),
        config.words,
        config.vector_mode
    ));
    text.push_str("leaderboard (test metrics of each word count's winner)\n");
    text.push_str("------------------------------------------------------\n");
    text.push_str(&leaderboard);
    text.push_str("\nfeature comparisons (fake vs credible)\n");
    text.push_str("--------------------------------------\n");
    text.push_str(&stats);
    text.push_str("\nmost influential words\n");
    text.push_str("----------------------\n");
    text.push_str(&influential);

    std::fs::write(report_path(&config.out), &text)?;
    println!("report: written to {}", report_path(&config.out).display());
    Ok(())
}
