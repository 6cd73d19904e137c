//! Artifact layout inside the output directory, plus loaders that point at
//! the producing subcommand when a stage is run out of order.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use veracity::corpus::{ingest_corpus, Corpus, CorpusFormat, SplitAssignment};
use veracity::model::PreppedDoc;
use veracity::textprep::TokenStream;
use veracity::vocab::Vocabulary;

pub fn corpus_path(out: &Path) -> PathBuf {
    out.join("corpus.jsonl")
}

pub fn split_path(out: &Path) -> PathBuf {
    out.join("split.tsv")
}

pub fn prep_path(out: &Path, words: u32) -> PathBuf {
    out.join(format!("prep_{words}.tsv"))
}

pub fn vocab_path(out: &Path, words: u32) -> PathBuf {
    out.join(format!("vocab_{words}.tsv"))
}

pub fn models_dir(out: &Path) -> PathBuf {
    out.join("models")
}

pub fn winner_model_path(out: &Path) -> PathBuf {
    models_dir(out).join("winner.model")
}

pub fn selection_path(out: &Path) -> PathBuf {
    out.join("selection.json")
}

pub fn leaderboard_path(out: &Path) -> PathBuf {
    out.join("leaderboard.csv")
}

pub fn stats_path(out: &Path) -> PathBuf {
    out.join("stats.csv")
}

pub fn influential_path(out: &Path) -> PathBuf {
    out.join("influential_words.csv")
}

pub fn evaluation_path(out: &Path) -> PathBuf {
    out.join("evaluation.csv")
}

pub fn report_path(out: &Path) -> PathBuf {
    out.join("report.txt")
}

/// Open an artifact for reading, or explain which subcommand produces it.
pub fn require(path: &Path, producer: &str) -> Result<File> {
    File::open(path).with_context(|| {
        format!(
            "missing artifact {}: run `veracity {producer}` first",
            path.display()
        )
    })
}

pub fn load_corpus(out: &Path) -> Result<Corpus> {
    let path = corpus_path(out);
    // probe first so the hint is ours, not the parser's
    require(&path, "ingest")?;
    ingest_corpus(&path, CorpusFormat::Jsonl)
        .with_context(|| format!("reading {}", path.display()))
}

pub fn load_split(out: &Path) -> Result<SplitAssignment> {
    let path = split_path(out);
    let file = require(&path, "ingest")?;
    SplitAssignment::read(BufReader::new(file))
        .with_context(|| format!("reading {}", path.display()))
}

pub fn load_vocab(out: &Path, words: u32) -> Result<Vocabulary> {
    let path = vocab_path(out, words);
    let file = require(&path, "vocab")?;
    Vocabulary::read(BufReader::new(file))
        .with_context(|| format!("reading {}", path.display()))
}

/// Prep cache: one article per line, `id<TAB>space-joined stems`.
pub fn write_prep(path: &Path, docs: &[PreppedDoc]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    for doc in docs {
        writeln!(w, "{}\t{}", doc.id, doc.tokens.tokens.join(" "))?;
    }
    w.flush()?;
    Ok(())
}

/// Rehydrate prepped documents, pulling labels back from the corpus.
pub fn load_prepped(out: &Path, words: u32, corpus: &Corpus) -> Result<Vec<PreppedDoc>> {
    let path = prep_path(out, words);
    let file = require(&path, "prep")?;
    let mut docs = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let (id, stems) = line
            .split_once('\t')
            .with_context(|| format!("{}:{}: expected id<TAB>stems", path.display(), i + 1))?;
        let article = corpus.get(id).with_context(|| {
            format!("{}:{}: id `{id}` is not in the corpus", path.display(), i + 1)
        })?;
        let tokens: Vec<String> = stems.split_whitespace().map(str::to_string).collect();
        docs.push(PreppedDoc {
            id: id.to_string(),
            label: article.label,
            tokens: TokenStream { tokens, stemmed: true },
        });
    }
    if docs.is_empty() {
        bail!("{} holds no documents", path.display());
    }
    Ok(docs)
}

/// Turn a classifier spec name into a stable file name.
pub fn model_file_name(spec_name: &str) -> String {
    let slug: String = spec_name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    format!("{}.model", slug.trim_matches('_'))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_artifact_names_the_producer() {
        let dir = tempfile::tempdir().unwrap();
        let err = load_split(dir.path()).unwrap_err();
        assert!(err.to_string().contains("veracity ingest"), "{err}");
    }

    #[test]
    fn model_file_names_are_flat() {
        assert_eq!(
            model_file_name("bagged_trees(b=25,max_depth=10)"),
            "bagged_trees_b_25_max_depth_10.model"
        );
    }
}
