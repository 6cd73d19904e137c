//! Vocabulary construction: List A (stem frequencies over the training
//! articles' truncated streams) and List B (high-frequency content-word
//! stems, at most `cap` of them), plus article vectorization over List B.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::textprep::{stem, TokenStream};
use crate::{Error, Result};

/// List A: stem → total frequency.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordCounts {
    counts: BTreeMap<String, u64>,
}

impl WordCounts {
    pub fn new() -> WordCounts {
        WordCounts::default()
    }

    pub fn add(&mut self, stem: &str, n: u64) {
        *self.counts.entry(stem.to_string()).or_insert(0) += n;
    }

    pub fn get(&self, stem: &str) -> u64 {
        self.counts.get(stem).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.counts.iter().map(|(k, &v)| (k.as_str(), v))
    }
}

/// Closed-class function words, excluded from every vocabulary.
#[derive(Debug, Clone)]
pub struct FunctionWordList {
    words: HashSet<String>,
    stems: HashSet<String>,
}

impl FunctionWordList {
    pub fn new(words: impl IntoIterator<Item = String>) -> Result<FunctionWordList> {
        let words: HashSet<String> = words.into_iter().collect();
        if words.is_empty() {
            return Err(Error::InvalidConfig("function word list is empty".into()));
        }
        // List A holds stems, so stopwords must be matched in stem space too
        let stems = words.iter().map(|w| stem(w)).collect();
        Ok(FunctionWordList { words, stems })
    }

    /// The stopword inventory shipped in-repo (Glasgow IR list lineage).
    pub fn builtin() -> FunctionWordList {
        let raw = include_str!("data/stopwords.txt");
        FunctionWordList::new(
            raw.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(str::to_string),
        )
        .expect("builtin stopword list is non-empty")
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word) || self.stems.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Parameters List B was built with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VocabParams {
    pub word_count: u32,
    pub min_freq: u64,
    pub cap: usize,
}

/// List B: content-word stems ordered by descending List A frequency,
/// ties broken lexicographically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vocabulary {
    stems: Vec<String>,
    frequencies: Vec<u64>,
    pub params: VocabParams,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

impl Vocabulary {
    fn build_index(stems: &[String]) -> HashMap<String, usize> {
        stems
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.stems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stems.is_empty()
    }

    pub fn stems(&self) -> &[String] {
        &self.stems
    }

    pub fn frequency(&self, rank: usize) -> u64 {
        self.frequencies[rank]
    }

    pub fn position(&self, stem: &str) -> Option<usize> {
        self.index.get(stem).copied()
    }

    /// Stable FNV-1a fingerprint over the entries and parameters; models
    /// refuse vectors from any other vocabulary.
    pub fn fingerprint(&self) -> String {
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |bytes: &[u8]| {
            for &b in bytes {
                hash ^= b as u64;
                hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
            }
        };
        eat(&self.params.word_count.to_le_bytes());
        eat(&self.params.min_freq.to_le_bytes());
        eat(&(self.params.cap as u64).to_le_bytes());
        for (s, f) in self.stems.iter().zip(&self.frequencies) {
            eat(s.as_bytes());
            eat(&[0]);
            eat(&f.to_le_bytes());
        }
        format!("{hash:016x}")
    }

    /// Header line `X,min_freq,cap`, then `rank,stem,frequency` lines.
    pub fn write<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(
            w,
            "{},{},{}",
            self.params.word_count, self.params.min_freq, self.params.cap
        )?;
        for (rank, (stem, freq)) in self.stems.iter().zip(&self.frequencies).enumerate() {
            writeln!(w, "{rank},{stem},{freq}")?;
        }
        Ok(())
    }

    pub fn read<R: BufRead>(r: R) -> Result<Vocabulary> {
        let mut lines = r.lines();
        let header = lines.next().ok_or_else(|| Error::MalformedFile {
            what: "vocabulary".into(),
            line: 1,
            detail: "missing header".into(),
        })??;
        let parts: Vec<&str> = header.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::MalformedFile {
                what: "vocabulary".into(),
                line: 1,
                detail: "header must be `X,min_freq,cap`".into(),
            });
        }
        let bad = |line: usize, detail: &str| Error::MalformedFile {
            what: "vocabulary".into(),
            line,
            detail: detail.into(),
        };
        let params = VocabParams {
            word_count: parts[0].parse().map_err(|_| bad(1, "bad X"))?,
            min_freq: parts[1].parse().map_err(|_| bad(1, "bad min_freq"))?,
            cap: parts[2].parse().map_err(|_| bad(1, "bad cap"))?,
        };
        let mut stems = Vec::new();
        let mut frequencies = Vec::new();
        for (i, line) in lines.enumerate() {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(bad(i + 2, "expected `rank,stem,frequency`"));
            }
            let rank: usize = fields[0].parse().map_err(|_| bad(i + 2, "bad rank"))?;
            if rank != stems.len() {
                return Err(bad(i + 2, "ranks out of order"));
            }
            stems.push(fields[1].to_string());
            frequencies.push(fields[2].parse().map_err(|_| bad(i + 2, "bad frequency"))?);
        }
        let index = Vocabulary::build_index(&stems);
        Ok(Vocabulary { stems, frequencies, params, index })
    }
}

/// Exact stem frequencies over already-truncated token streams.
pub fn build_list_a(docs: &[TokenStream]) -> Result<WordCounts> {
    if docs.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut counts = WordCounts::new();
    for doc in docs {
        for token in &doc.tokens {
            counts.add(token, 1);
        }
    }
    Ok(counts)
}

/// Published minimum List A frequency per word count X.
pub fn min_frequency_for(x: u32) -> Result<u64> {
    match x {
        30 => Ok(4),
        60 => Ok(5),
        90 | 120 => Ok(6),
        other => Err(Error::UnsupportedWordCount(other)),
    }
}

/// Filter by frequency, drop function words, order by descending
/// frequency (lexicographic tiebreak), keep at most `cap` stems.
pub fn build_list_b(
    list_a: &WordCounts,
    min_freq: u64,
    stopwords: &FunctionWordList,
    cap: usize,
    word_count: u32,
) -> Result<Vocabulary> {
    if cap == 0 {
        return Err(Error::InvalidConfig("vocabulary cap must be positive".into()));
    }
    let mut qualifying: Vec<(&str, u64)> = list_a
        .iter()
        .filter(|(stem, freq)| *freq >= min_freq && !stopwords.contains(stem))
        .collect();
    qualifying.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    qualifying.truncate(cap);
    if qualifying.is_empty() {
        return Err(Error::EmptyVocabulary);
    }
    let stems: Vec<String> = qualifying.iter().map(|(s, _)| s.to_string()).collect();
    let frequencies: Vec<u64> = qualifying.iter().map(|(_, f)| *f).collect();
    let index = Vocabulary::build_index(&stems);
    Ok(Vocabulary {
        stems,
        frequencies,
        params: VocabParams { word_count, min_freq, cap },
        index,
    })
}

/// One article's numeric vector over a vocabulary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    pub id: String,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorMode {
    Count,
    Tfidf,
}

impl VectorMode {
    pub fn parse(s: &str) -> Result<VectorMode> {
        match s {
            "count" => Ok(VectorMode::Count),
            "tfidf" => Ok(VectorMode::Tfidf),
            other => Err(Error::InvalidConfig(format!("unknown vector mode `{other}`"))),
        }
    }
}

/// Per-stem document frequencies, frozen from the training split.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DocumentFrequencies {
    pub doc_freqs: Vec<u64>,
    pub n_docs: u64,
}

impl DocumentFrequencies {
    pub fn from_docs(docs: &[TokenStream], vocab: &Vocabulary) -> DocumentFrequencies {
        let mut doc_freqs = vec![0u64; vocab.len()];
        for doc in docs {
            let mut seen = HashSet::new();
            for token in &doc.tokens {
                if let Some(i) = vocab.position(token) {
                    if seen.insert(i) {
                        doc_freqs[i] += 1;
                    }
                }
            }
        }
        DocumentFrequencies { doc_freqs, n_docs: docs.len() as u64 }
    }

    /// ln(N / df), with unseen stems weighted ln(N + 1).
    pub fn idf(&self, rank: usize) -> f64 {
        let df = self.doc_freqs[rank];
        if df == 0 {
            ((self.n_docs + 1) as f64).ln()
        } else {
            (self.n_docs as f64 / df as f64).ln()
        }
    }
}

/// Count occurrences of each vocabulary stem in a truncated document.
/// `doc_x` is the word count the document was prepared with.
pub fn vectorize(
    id: &str,
    doc: &TokenStream,
    doc_x: u32,
    vocab: &Vocabulary,
) -> Result<FeatureVector> {
    if doc_x != vocab.params.word_count {
        return Err(Error::WordCountMismatch {
            doc_x,
            vocab_x: vocab.params.word_count,
        });
    }
    let mut values = vec![0.0; vocab.len()];
    for token in &doc.tokens {
        if let Some(i) = vocab.position(token) {
            values[i] += 1.0;
        }
    }
    Ok(FeatureVector { id: id.to_string(), values })
}

/// Count vector reweighted by ln(N/df) with frozen training-split df.
pub fn vectorize_tfidf(
    id: &str,
    doc: &TokenStream,
    doc_x: u32,
    vocab: &Vocabulary,
    df: &DocumentFrequencies,
) -> Result<FeatureVector> {
    let mut v = vectorize(id, doc, doc_x, vocab)?;
    for (i, value) in v.values.iter_mut().enumerate() {
        *value *= df.idf(i);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn stream(tokens: &[&str]) -> TokenStream {
        TokenStream {
            tokens: tokens.iter().map(|s| s.to_string()).collect(),
            stemmed: true,
        }
    }

    fn stopwords(words: &[&str]) -> FunctionWordList {
        FunctionWordList::new(words.iter().map(|s| s.to_string())).unwrap()
    }

    #[test]
    fn list_a_counts_tokens() {
        let counts = build_list_a(&[stream(&["a", "b", "a"]), stream(&["b", "c"])]).unwrap();
        assert_eq!(counts.get("a"), 2);
        assert_eq!(counts.get("b"), 2);
        assert_eq!(counts.get("c"), 1);
        assert_eq!(counts.len(), 3);
    }

    #[test]
    fn list_a_empty_doc_contributes_nothing() {
        let counts = build_list_a(&[stream(&["a"]), stream(&[])]).unwrap();
        assert_eq!(counts.total(), 1);
    }

    #[test]
    fn list_a_rejects_empty_corpus() {
        assert!(build_list_a(&[]).is_err());
    }

    #[test]
    fn min_frequency_table() {
        assert_eq!(min_frequency_for(30).unwrap(), 4);
        assert_eq!(min_frequency_for(60).unwrap(), 5);
        assert_eq!(min_frequency_for(90).unwrap(), 6);
        assert_eq!(min_frequency_for(120).unwrap(), 6);
        assert!(matches!(min_frequency_for(45), Err(Error::UnsupportedWordCount(45))));
    }

    #[test]
    fn list_b_filters_sorts_and_caps() {
        let mut a = WordCounts::new();
        for (w, n) in [("the", 50), ("gun", 7), ("of", 40), ("city", 6), ("rare", 2)] {
            a.add(w, n);
        }
        let vocab = build_list_b(&a, 6, &stopwords(&["the", "of"]), 1000, 90).unwrap();
        assert_eq!(vocab.stems(), &["gun".to_string(), "city".to_string()]);
    }

    #[test]
    fn list_b_cap_applies_after_stopword_removal() {
        let mut a = WordCounts::new();
        for i in 0..1500 {
            a.add(&format!("w{i:04}"), 10);
        }
        let vocab = build_list_b(&a, 6, &stopwords(&["the"]), 1000, 90).unwrap();
        assert_eq!(vocab.len(), 1000);
    }

    #[test]
    fn list_b_tiebreak_is_lexicographic() {
        let mut a = WordCounts::new();
        a.add("city", 6);
        a.add("act", 6);
        let vocab = build_list_b(&a, 6, &stopwords(&["the"]), 10, 90).unwrap();
        assert_eq!(vocab.stems()[0], "act");
        assert_eq!(vocab.stems()[1], "city");
    }

    #[test]
    fn list_b_empty_result_is_error() {
        let mut a = WordCounts::new();
        a.add("the", 50);
        assert!(matches!(
            build_list_b(&a, 6, &stopwords(&["the"]), 10, 90),
            Err(Error::EmptyVocabulary)
        ));
    }

    #[test]
    fn stopwords_matched_in_stem_space() {
        let mut a = WordCounts::new();
        a.add("thi", 20); // stem of "this"
        a.add("gun", 10);
        let vocab = build_list_b(&a, 6, &stopwords(&["this"]), 10, 90).unwrap();
        assert_eq!(vocab.stems(), &["gun".to_string()]);
    }

    #[test]
    fn builtin_stopwords_plausible() {
        let list = FunctionWordList::builtin();
        assert!(list.len() >= 250, "expected ~300 stopwords, got {}", list.len());
        for w in ["the", "to", "a", "of", "and", "with"] {
            assert!(list.contains(w), "missing stopword {w}");
        }
        assert!(!list.contains("gun"));
    }

    #[test]
    fn vectorize_counts() {
        let mut a = WordCounts::new();
        a.add("gun", 7);
        a.add("city", 6);
        let vocab = build_list_b(&a, 6, &stopwords(&["the"]), 10, 90).unwrap();
        // vocab order: gun (7), city (6)
        let v = vectorize("d1", &stream(&["gun", "city", "gun"]), 90, &vocab).unwrap();
        assert_eq!(v.values, vec![2.0, 1.0]);
    }

    #[test]
    fn vectorize_unknown_words_give_zero_vector() {
        let mut a = WordCounts::new();
        a.add("gun", 7);
        let vocab = build_list_b(&a, 6, &stopwords(&["the"]), 10, 90).unwrap();
        let v = vectorize("d1", &stream(&["x", "y"]), 90, &vocab).unwrap();
        assert_eq!(v.values, vec![0.0]);
    }

    #[test]
    fn vectorize_rejects_word_count_mismatch() {
        let mut a = WordCounts::new();
        a.add("gun", 7);
        let vocab = build_list_b(&a, 6, &stopwords(&["the"]), 10, 90).unwrap();
        assert!(matches!(
            vectorize("d1", &stream(&["gun"]), 60, &vocab),
            Err(Error::WordCountMismatch { .. })
        ));
    }

    #[test]
    fn tfidf_weighting() {
        let mut a = WordCounts::new();
        a.add("gun", 7);
        a.add("city", 6);
        let vocab = build_list_b(&a, 6, &stopwords(&["the"]), 10, 90).unwrap();
        let train = vec![stream(&["gun", "city"]), stream(&["gun"])];
        let df = DocumentFrequencies::from_docs(&train, &vocab);
        let v = vectorize_tfidf("d", &stream(&["gun", "city"]), 90, &vocab, &df).unwrap();
        assert!((v.values[0] - 0.0).abs() < 1e-12); // df = N → idf 0
        assert!((v.values[1] - (2.0f64).ln()).abs() < 1e-12);
    }

    #[test]
    fn vocabulary_roundtrip_is_identity() {
        let mut a = WordCounts::new();
        for (w, n) in [("gun", 9), ("city", 6), ("mayor", 8)] {
            a.add(w, n);
        }
        let vocab = build_list_b(&a, 6, &stopwords(&["the"]), 1000, 90).unwrap();
        let mut buf = Vec::new();
        vocab.write(&mut buf).unwrap();
        let reread = Vocabulary::read(&buf[..]).unwrap();
        assert_eq!(vocab, reread);
        assert_eq!(vocab.fingerprint(), reread.fingerprint());
        let mut buf2 = Vec::new();
        reread.write(&mut buf2).unwrap();
        assert_eq!(buf, buf2);
    }

    proptest! {
        /// List B is order-free: counts ignore document order.
        #[test]
        fn list_b_independent_of_doc_order(
            mut docs in proptest::collection::vec(
                proptest::collection::vec("[a-d]", 0..8), 1..12),
        ) {
            let to_streams = |docs: &[Vec<String>]| -> Vec<TokenStream> {
                docs.iter()
                    .map(|d| TokenStream { tokens: d.clone(), stemmed: true })
                    .collect()
            };
            let a1 = build_list_a(&to_streams(&docs)).unwrap();
            docs.reverse();
            let a2 = build_list_a(&to_streams(&docs)).unwrap();
            prop_assert_eq!(a1, a2);
        }

        /// Sum of a count vector never exceeds the truncation X.
        #[test]
        fn count_vector_sum_bounded_by_x(
            tokens in proptest::collection::vec("[a-f]{1,4}", 0..30),
        ) {
            let mut a = WordCounts::new();
            for t in &tokens { a.add(t, 6); }
            if a.is_empty() { return Ok(()); }
            let vocab = build_list_b(&a, 1, &stopwords(&["zzz"]), 1000, 30).unwrap();
            let doc = TokenStream { tokens: tokens.iter().take(30).cloned().collect(), stemmed: true };
            let v = vectorize("d", &doc, 30, &vocab).unwrap();
            prop_assert!(v.values.iter().sum::<f64>() <= 30.0);
        }
    }
}
