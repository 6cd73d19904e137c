//! Labeled article ingestion, body-text extraction from saved HTML,
//! boilerplate removal, and balanced randomized splits.

mod html;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use html::extract_paragraphs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Credible,
    Fake,
}

impl Label {
    pub fn parse(s: &str) -> Result<Label> {
        match s {
            "credible" => Ok(Label::Credible),
            "fake" => Ok(Label::Fake),
            other => Err(Error::InvalidLabel(other.to_string())),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Label::Credible => "credible",
            Label::Fake => "fake",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One labeled article. Exactly one of `raw_html` / `raw_text` is
/// non-empty at ingestion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArticleRecord {
    pub id: String,
    pub source_id: String,
    pub label: Label,
    #[serde(default)]
    pub url: String,
    /// ISO calendar date (YYYY-MM-DD) when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub published_at: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_html: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_text: Option<String>,
}

impl ArticleRecord {
    /// Article body: paragraph-extracted HTML, or the raw text as given.
    pub fn body(&self) -> String {
        match (&self.raw_html, &self.raw_text) {
            (Some(h), _) if !h.is_empty() => extract_paragraphs(h),
            (_, Some(t)) => t.clone(),
            _ => String::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Corpus {
    pub articles: Vec<ArticleRecord>,
    pub sources: Vec<(String, Label)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Validation,
    Test,
}

impl Split {
    pub fn as_str(&self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Validation => "validation",
            Split::Test => "test",
        }
    }

    pub fn parse(s: &str) -> Result<Split> {
        match s {
            "train" => Ok(Split::Train),
            "validation" => Ok(Split::Validation),
            "test" => Ok(Split::Test),
            other => Err(Error::InvalidConfig(format!("unknown split `{other}`"))),
        }
    }
}

/// Deterministic article-id → split mapping for a given seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitAssignment {
    pub assignments: BTreeMap<String, Split>,
    pub seed: u64,
}

impl SplitAssignment {
    pub fn ids_in(&self, split: Split) -> Vec<&str> {
        self.assignments
            .iter()
            .filter(|(_, &s)| s == split)
            .map(|(id, _)| id.as_str())
            .collect()
    }

    /// `id,split` lines sorted by id; byte-exact for determinism checks.
    pub fn write<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "# seed={}", self.seed)?;
        for (id, split) in &self.assignments {
            writeln!(w, "{},{}", id, split.as_str())?;
        }
        Ok(())
    }

    pub fn read<R: BufRead>(r: R) -> Result<SplitAssignment> {
        let mut assignments = BTreeMap::new();
        let mut seed = 0;
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("# seed=") {
                seed = rest.parse().map_err(|_| Error::MalformedFile {
                    what: "split".into(),
                    line: i + 1,
                    detail: "bad seed".into(),
                })?;
                continue;
            }
            let (id, split) = line.rsplit_once(',').ok_or_else(|| Error::MalformedFile {
                what: "split".into(),
                line: i + 1,
                detail: "expected `id,split`".into(),
            })?;
            assignments.insert(id.to_string(), Split::parse(split)?);
        }
        Ok(SplitAssignment { assignments, seed })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Jsonl,
    Csv,
    DirectoryTree,
}

impl Corpus {
    pub fn new(articles: Vec<ArticleRecord>) -> Result<Corpus> {
        let mut sources: BTreeMap<String, Label> = BTreeMap::new();
        let mut ids = HashSet::new();
        for article in &articles {
            if !ids.insert(article.id.clone()) {
                return Err(Error::DuplicateId(article.id.clone()));
            }
            match sources.entry(article.source_id.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(article.label);
                }
                std::collections::btree_map::Entry::Occupied(e) => {
                    if *e.get() != article.label {
                        return Err(Error::LabelMismatch {
                            id: article.source_id.clone(),
                            expected: e.get().to_string(),
                            found: article.label.to_string(),
                        });
                    }
                }
            }
        }
        Ok(Corpus {
            articles,
            sources: sources.into_iter().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.articles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.articles.is_empty()
    }

    pub fn label_counts(&self) -> BTreeMap<Label, usize> {
        let mut counts = BTreeMap::new();
        for a in &self.articles {
            *counts.entry(a.label).or_insert(0) += 1;
        }
        counts
    }

    pub fn get(&self, id: &str) -> Option<&ArticleRecord> {
        self.articles.iter().find(|a| a.id == id)
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<()> {
        for article in &self.articles {
            serde_json::to_writer(&mut w, article)?;
            writeln!(w)?;
        }
        Ok(())
    }
}

/// Raw on-disk record shape shared by the jsonl and csv readers.
#[derive(Debug, Default, Deserialize)]
struct RawRecord {
    #[serde(default)]
    id: Option<String>,
    #[serde(default, alias = "source_id")]
    source: Option<String>,
    #[serde(default)]
    label: Option<String>,
    #[serde(default)]
    url: Option<String>,
    #[serde(default)]
    published_at: Option<String>,
    #[serde(default, alias = "raw_html")]
    html: Option<String>,
    #[serde(default, alias = "raw_text")]
    text: Option<String>,
}

fn non_empty(s: Option<String>) -> Option<String> {
    s.filter(|v| !v.is_empty())
}

fn validate_record(raw: RawRecord, index: usize) -> Result<ArticleRecord> {
    let missing = |field: &str| Error::MissingField {
        index,
        field: field.to_string(),
    };
    let id = non_empty(raw.id).ok_or_else(|| missing("id"))?;
    let source_id = non_empty(raw.source).ok_or_else(|| missing("source"))?;
    let label = Label::parse(&non_empty(raw.label).ok_or_else(|| missing("label"))?)?;
    let html = non_empty(raw.html);
    let text = non_empty(raw.text);
    if html.is_some() == text.is_some() {
        return Err(missing("exactly one of html/text"));
    }
    Ok(ArticleRecord {
        id,
        source_id,
        label,
        url: raw.url.unwrap_or_default(),
        published_at: non_empty(raw.published_at),
        raw_html: html,
        raw_text: text,
    })
}

/// Load a labeled corpus from disk. See the README for the exact field
/// names per format.
pub fn ingest_corpus(path: &Path, format: CorpusFormat) -> Result<Corpus> {
    let articles = match format {
        CorpusFormat::Jsonl => {
            let file = std::fs::File::open(path)?;
            let mut articles = Vec::new();
            for (i, line) in BufReader::new(file).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let raw: RawRecord = serde_json::from_str(&line)?;
                articles.push(validate_record(raw, i)?);
            }
            articles
        }
        CorpusFormat::Csv => {
            let mut reader = csv::Reader::from_path(path)?;
            let mut articles = Vec::new();
            for (i, row) in reader.deserialize::<RawRecord>().enumerate() {
                articles.push(validate_record(row?, i)?);
            }
            articles
        }
        CorpusFormat::DirectoryTree => ingest_directory(path)?,
    };
    Corpus::new(articles)
}

/// Directory layout: `<root>/<label>/<source>/<article>.{html,txt}`.
/// The id is the path relative to the root.
fn ingest_directory(root: &Path) -> Result<Vec<ArticleRecord>> {
    let mut articles = Vec::new();
    let mut entries: Vec<_> = walkdir::WalkDir::new(root)
        .into_iter()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_type().is_file())
        .map(|e| e.into_path())
        .collect();
    entries.sort();
    for (i, path) in entries.iter().enumerate() {
        let rel = path.strip_prefix(root).unwrap_or(path);
        let mut parts = rel.components();
        let label_part = parts
            .next()
            .and_then(|c| c.as_os_str().to_str())
            .ok_or_else(|| Error::MissingField { index: i, field: "label".into() })?;
        let source_part = parts
            .next()
            .and_then(|c| c.as_os_str().to_str())
            .ok_or_else(|| Error::MissingField { index: i, field: "source".into() })?;
        let label = Label::parse(label_part)?;
        let content = std::fs::read_to_string(path)?;
        let is_html = path.extension().map(|e| e == "html" || e == "htm").unwrap_or(false);
        articles.push(ArticleRecord {
            id: rel.to_string_lossy().to_string(),
            source_id: source_part.to_string(),
            label,
            url: String::new(),
            published_at: None,
            raw_html: is_html.then_some(content.clone()),
            raw_text: (!is_html).then_some(content),
        });
    }
    Ok(articles)
}

/// Line filter for datelines, bylines and other scraped page furniture.
#[derive(Debug, Clone)]
pub struct BoilerplateFilter {
    patterns: Vec<Regex>,
}

impl BoilerplateFilter {
    pub fn new(patterns: &[String]) -> Result<BoilerplateFilter> {
        let mut compiled = Vec::with_capacity(patterns.len());
        for p in patterns {
            compiled.push(Regex::new(p).map_err(|source| Error::InvalidPattern {
                pattern: p.clone(),
                source,
            })?);
        }
        Ok(BoilerplateFilter { patterns: compiled })
    }

    /// Delete every match of every pattern from each line; lines left
    /// empty are dropped. Anchored prefix patterns (datelines) therefore
    /// strip the furniture but keep the paragraph.
    pub fn apply(&self, text: &str) -> String {
        if self.patterns.is_empty() {
            return text.to_string();
        }
        let mut kept = Vec::new();
        for line in text.lines() {
            let mut line = line.to_string();
            for p in &self.patterns {
                if p.is_match(&line) {
                    line = p.replace_all(&line, "").into_owned();
                }
            }
            let line = line.trim();
            if !line.is_empty() {
                kept.push(line.to_string());
            }
        }
        kept.join("\n")
    }
}

/// Patterns that cover the fixture corpus and common wire-service furniture.
pub const DEFAULT_BOILERPLATE_PATTERNS: &[&str] = &[
    r"^[A-Z][A-Z ]+ \([A-Za-z ]+\) -\s*",
    r"(?i)^reporting by .*",
    r"(?i)^editing by .*",
    r"(?i)^by [A-Z][a-z]+ [A-Z][a-z]+$",
    r"(?i).*subscribe to our newsletter.*",
    r"(?i)^copyright \d{4}.*",
];

pub fn remove_boilerplate(text: &str, filter: &BoilerplateFilter) -> String {
    filter.apply(text)
}

/// Stratified 60/20/20 split: by label first, by source second, shuffled
/// with a seeded generator. Deterministic for a fixed (corpus, seed).
pub fn split_corpus(
    corpus: &Corpus,
    fractions: (f64, f64, f64),
    seed: u64,
) -> Result<SplitAssignment> {
    let (f_train, f_val, f_test) = fractions;
    if (f_train + f_val + f_test - 1.0).abs() > 1e-9 || f_train <= 0.0 || f_val < 0.0 || f_test < 0.0
    {
        return Err(Error::InvalidConfig("split fractions must sum to 1".into()));
    }
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignments = BTreeMap::new();

    let labels: BTreeSet<Label> = corpus.articles.iter().map(|a| a.label).collect();
    for label in labels {
        // group this label's articles by source, sources in sorted order
        let mut by_source: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for a in corpus.articles.iter().filter(|a| a.label == label) {
            by_source.entry(&a.source_id).or_default().push(&a.id);
        }
        let total: usize = by_source.values().map(Vec::len).sum();
        if total < 2 {
            return Err(Error::CannotStratify(label.to_string()));
        }
        // shuffle within each source, then interleave sources round-robin
        // so every split sees every source where counts permit
        let mut queues: Vec<Vec<&str>> = by_source
            .into_values()
            .map(|mut ids| {
                ids.shuffle(&mut rng);
                ids
            })
            .collect();
        let mut ordered = Vec::with_capacity(total);
        while !queues.is_empty() {
            for q in queues.iter_mut() {
                if let Some(id) = q.pop() {
                    ordered.push(id);
                }
            }
            queues.retain(|q| !q.is_empty());
        }

        let (n_train, n_val, _n_test) = largest_remainder(total, f_train, f_val, f_test);
        for (i, id) in ordered.into_iter().enumerate() {
            let split = if i < n_train {
                Split::Train
            } else if i < n_train + n_val {
                Split::Validation
            } else {
                Split::Test
            };
            assignments.insert(id.to_string(), split);
        }
    }
    Ok(SplitAssignment { assignments, seed })
}

/// Apportion `total` into three integer counts by largest remainder.
fn largest_remainder(total: usize, f1: f64, f2: f64, f3: f64) -> (usize, usize, usize) {
    let ideal = [total as f64 * f1, total as f64 * f2, total as f64 * f3];
    let mut counts = [ideal[0] as usize, ideal[1] as usize, ideal[2] as usize];
    let mut leftover = total - counts.iter().sum::<usize>();
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&a, &b| {
        let ra = ideal[a] - ideal[a].floor();
        let rb = ideal[b] - ideal[b].floor();
        rb.partial_cmp(&ra).unwrap().then(a.cmp(&b))
    });
    for &i in &order {
        if leftover == 0 {
            break;
        }
        counts[i] += 1;
        leftover -= 1;
    }
    (counts[0], counts[1], counts[2])
}

/// Replace articles in place, keyed by old id. Replacement labels must
/// match the replaced article's label; all corpus invariants are
/// re-checked on the result.
pub fn patch_corpus(
    corpus: &Corpus,
    replacements: &[(String, ArticleRecord)],
) -> Result<Corpus> {
    let index: HashMap<&str, usize> = corpus
        .articles
        .iter()
        .enumerate()
        .map(|(i, a)| (a.id.as_str(), i))
        .collect();
    let mut articles = corpus.articles.clone();
    for (old_id, replacement) in replacements {
        let &i = index
            .get(old_id.as_str())
            .ok_or_else(|| Error::UnknownId(old_id.clone()))?;
        if articles[i].label != replacement.label {
            return Err(Error::LabelMismatch {
                id: old_id.clone(),
                expected: articles[i].label.to_string(),
                found: replacement.label.to_string(),
            });
        }
        articles[i] = replacement.clone();
    }
    Corpus::new(articles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(id: &str, source: &str, label: Label) -> ArticleRecord {
        ArticleRecord {
            id: id.into(),
            source_id: source.into(),
            label,
            url: String::new(),
            published_at: Some("2018-03-01".into()),
            raw_html: None,
            raw_text: Some(format!("body of {id}")),
        }
    }

    fn sample_corpus(n_per_label: usize, sources_per_label: usize) -> Corpus {
        let mut articles = Vec::new();
        for (label, tag) in [(Label::Credible, "c"), (Label::Fake, "f")] {
            for i in 0..n_per_label {
                let s = i % sources_per_label;
                articles.push(record(&format!("{tag}{i}"), &format!("src_{tag}{s}"), label));
            }
        }
        Corpus::new(articles).unwrap()
    }

    #[test]
    fn ingest_jsonl_four_records() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("corpus.jsonl");
        std::fs::write(
            &path,
            concat!(
                r#"{"id":"a1","source":"s1","label":"credible","text":"one"}"#, "\n",
                r#"{"id":"a2","source":"s1","label":"credible","text":"two"}"#, "\n",
                r#"{"id":"b1","source":"s2","label":"fake","html":"<p>three</p>"}"#, "\n",
                r#"{"id":"b2","source":"s2","label":"fake","text":"four"}"#, "\n",
            ),
        )
        .unwrap();
        let corpus = ingest_corpus(&path, CorpusFormat::Jsonl).unwrap();
        assert_eq!(corpus.len(), 4);
        assert_eq!(corpus.label_counts().len(), 2);
        assert_eq!(corpus.sources.len(), 2);
    }

    #[test]
    fn ingest_rejects_missing_label() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("corpus.jsonl");
        std::fs::write(
            &path,
            concat!(
                r#"{"id":"a1","source":"s1","label":"credible","text":"one"}"#, "\n",
                r#"{"id":"a2","source":"s1","text":"two"}"#, "\n",
            ),
        )
        .unwrap();
        let err = ingest_corpus(&path, CorpusFormat::Jsonl).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("record 1"), "got: {msg}");
        assert!(msg.contains("label"), "got: {msg}");
    }

    #[test]
    fn ingest_rejects_duplicate_ids() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("corpus.jsonl");
        std::fs::write(
            &path,
            concat!(
                r#"{"id":"a1","source":"s1","label":"credible","text":"one"}"#, "\n",
                r#"{"id":"a1","source":"s1","label":"credible","text":"two"}"#, "\n",
            ),
        )
        .unwrap();
        assert!(matches!(
            ingest_corpus(&path, CorpusFormat::Jsonl),
            Err(Error::DuplicateId(_))
        ));
    }

    #[test]
    fn ingest_rejects_both_html_and_text() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("corpus.jsonl");
        std::fs::write(
            &path,
            r#"{"id":"a1","source":"s1","label":"credible","text":"t","html":"<p>h</p>"}"#,
        )
        .unwrap();
        assert!(ingest_corpus(&path, CorpusFormat::Jsonl).is_err());
    }

    #[test]
    fn ingest_csv() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("corpus.csv");
        std::fs::write(
            &path,
            "id,source,label,published_at,html,text\n\
             a1,s1,credible,2018-01-02,,hello there\n\
             b1,s2,fake,,<p>hi</p>,\n",
        )
        .unwrap();
        let corpus = ingest_corpus(&path, CorpusFormat::Csv).unwrap();
        assert_eq!(corpus.len(), 2);
        assert_eq!(corpus.get("b1").unwrap().body(), "hi");
    }

    #[test]
    fn ingest_directory_tree() {
        let dir = tempfile::tempdir().unwrap();
        for (label, source, name, content) in [
            ("credible", "s1", "a.txt", "plain text body"),
            ("credible", "s1", "b.html", "<p>html body</p>"),
            ("fake", "s2", "c.txt", "fake body"),
        ] {
            let d = dir.path().join(label).join(source);
            std::fs::create_dir_all(&d).unwrap();
            std::fs::write(d.join(name), content).unwrap();
        }
        let corpus = ingest_corpus(dir.path(), CorpusFormat::DirectoryTree).unwrap();
        assert_eq!(corpus.len(), 3);
        assert_eq!(corpus.label_counts()[&Label::Credible], 2);
    }

    #[test]
    fn source_label_conflict_rejected() {
        let articles = vec![
            record("a", "s1", Label::Credible),
            record("b", "s1", Label::Fake),
        ];
        assert!(Corpus::new(articles).is_err());
    }

    #[test]
    fn boilerplate_dateline_removed() {
        // the dateline prefix is stripped; the story sentence survives
        let filter = BoilerplateFilter::new(&[r"^[A-Z]+ \(Reuters\) - ".to_string()]).unwrap();
        assert_eq!(
            remove_boilerplate("WASHINGTON (Reuters) - Story text\nMore text", &filter),
            "Story text\nMore text"
        );
    }

    #[test]
    fn boilerplate_empty_pattern_list_is_identity() {
        let filter = BoilerplateFilter::new(&[]).unwrap();
        assert_eq!(remove_boilerplate("a\nb", &filter), "a\nb");
    }

    #[test]
    fn boilerplate_keeps_surviving_lines_in_order() {
        let filter = BoilerplateFilter::new(&["drop.*".to_string()]).unwrap();
        let text = "keep one\ndrop a\nkeep two\ndrop b\ndrop c";
        assert_eq!(remove_boilerplate(text, &filter), "keep one\nkeep two");
    }

    #[test]
    fn boilerplate_invalid_pattern_is_config_error() {
        assert!(matches!(
            BoilerplateFilter::new(&["([".to_string()]),
            Err(Error::InvalidPattern { .. })
        ));
    }

    #[test]
    fn fixture_byline_removed_after_extraction() {
        let html = include_str!("../../tests/fixtures/article_with_byline.html");
        let text = extract_paragraphs(html);
        let patterns: Vec<String> =
            DEFAULT_BOILERPLATE_PATTERNS.iter().map(|s| s.to_string()).collect();
        let filter = BoilerplateFilter::new(&patterns).unwrap();
        let cleaned = remove_boilerplate(&text, &filter);
        assert!(!cleaned.contains("Reporting by"));
        assert!(!cleaned.contains("WASHINGTON (Reuters)"));
        assert!(cleaned.contains("lawmakers advanced a budget measure"));
    }

    #[test]
    fn split_100_articles_is_30_10_10_per_label() {
        let corpus = sample_corpus(50, 5);
        let split = split_corpus(&corpus, (0.6, 0.2, 0.2), 7).unwrap();
        for label in [Label::Credible, Label::Fake] {
            let mut counts = [0usize; 3];
            for a in corpus.articles.iter().filter(|a| a.label == label) {
                match split.assignments[&a.id] {
                    Split::Train => counts[0] += 1,
                    Split::Validation => counts[1] += 1,
                    Split::Test => counts[2] += 1,
                }
            }
            assert_eq!(counts, [30, 10, 10]);
        }
    }

    #[test]
    fn split_is_deterministic() {
        let corpus = sample_corpus(50, 5);
        let a = split_corpus(&corpus, (0.6, 0.2, 0.2), 7).unwrap();
        let b = split_corpus(&corpus, (0.6, 0.2, 0.2), 7).unwrap();
        assert_eq!(a, b);
        let mut buf_a = Vec::new();
        let mut buf_b = Vec::new();
        a.write(&mut buf_a).unwrap();
        b.write(&mut buf_b).unwrap();
        assert_eq!(buf_a, buf_b);
        // and a different seed moves at least one article
        let c = split_corpus(&corpus, (0.6, 0.2, 0.2), 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn split_keeps_fractions_on_a_desk_scale_corpus() {
        let mut articles = Vec::new();
        for i in 0..1053 {
            articles.push(record(&format!("c{i}"), &format!("src_c{}", i % 15), Label::Credible));
        }
        for i in 0..1054 {
            articles.push(record(&format!("f{i}"), &format!("src_f{}", i % 15), Label::Fake));
        }
        let corpus = Corpus::new(articles).unwrap();
        let split = split_corpus(&corpus, (0.6, 0.2, 0.2), 42).unwrap();
        let mut counts = [0usize; 3];
        for s in split.assignments.values() {
            match s {
                Split::Train => counts[0] += 1,
                Split::Validation => counts[1] += 1,
                Split::Test => counts[2] += 1,
            }
        }
        assert_eq!(counts.iter().sum::<usize>(), 2107);
        assert!((counts[0] as i64 - 1265).abs() <= 1, "train={}", counts[0]);
        assert!((counts[1] as i64 - 421).abs() <= 1, "val={}", counts[1]);
        assert!((counts[2] as i64 - 421).abs() <= 1, "test={}", counts[2]);
    }

    #[test]
    fn split_is_a_partition() {
        let corpus = sample_corpus(33, 4);
        let split = split_corpus(&corpus, (0.6, 0.2, 0.2), 3).unwrap();
        assert_eq!(split.assignments.len(), corpus.len());
        for a in &corpus.articles {
            assert!(split.assignments.contains_key(&a.id));
        }
    }

    #[test]
    fn split_rejects_single_article_label() {
        let articles = vec![
            record("a", "s1", Label::Credible),
            record("b", "s2", Label::Fake),
            record("c", "s2", Label::Fake),
        ];
        let corpus = Corpus::new(articles).unwrap();
        assert!(matches!(
            split_corpus(&corpus, (0.6, 0.2, 0.2), 1),
            Err(Error::CannotStratify(_))
        ));
    }

    #[test]
    fn split_roundtrip() {
        let corpus = sample_corpus(20, 2);
        let split = split_corpus(&corpus, (0.6, 0.2, 0.2), 11).unwrap();
        let mut buf = Vec::new();
        split.write(&mut buf).unwrap();
        let reread = SplitAssignment::read(&buf[..]).unwrap();
        assert_eq!(split, reread);
    }

    #[test]
    fn patch_replaces_article() {
        let corpus = sample_corpus(2, 1);
        let replacement = record("c9", "src_c0", Label::Credible);
        let patched = patch_corpus(&corpus, &[("c0".into(), replacement)]).unwrap();
        assert_eq!(patched.len(), 4);
        assert!(patched.get("c9").is_some());
        assert!(patched.get("c0").is_none());
    }

    #[test]
    fn patch_rejects_flipped_label() {
        let corpus = sample_corpus(2, 1);
        let replacement = record("x", "src_f0", Label::Fake);
        assert!(matches!(
            patch_corpus(&corpus, &[("c0".into(), replacement)]),
            Err(Error::LabelMismatch { .. })
        ));
    }

    #[test]
    fn patch_rejects_unknown_id() {
        let corpus = sample_corpus(2, 1);
        let replacement = record("x", "src_c0", Label::Credible);
        assert!(matches!(
            patch_corpus(&corpus, &[("nope".into(), replacement)]),
            Err(Error::UnknownId(_))
        ));
    }

    #[test]
    fn patch_preserves_size_and_label_counts() {
        let corpus = sample_corpus(40, 4);
        let mut replacements = Vec::new();
        for i in 0..13 {
            replacements.push((
                format!("f{i}"),
                record(&format!("nf{i}"), "src_f0", Label::Fake),
            ));
        }
        for i in 0..21 {
            replacements.push((
                format!("c{i}"),
                record(&format!("nc{i}"), "src_c0", Label::Credible),
            ));
        }
        let patched = patch_corpus(&corpus, &replacements).unwrap();
        assert_eq!(patched.len(), corpus.len());
        assert_eq!(patched.label_counts(), corpus.label_counts());
    }
}
