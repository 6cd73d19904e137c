//! Stylometric feature extraction: part-of-speech distribution, five-class
//! sentence sentiment, word/sentence lengths, and tone summary proxies.
//!
//! Everything here is lexicon- or heuristic-driven and self-contained; the
//! shipped lexicons are versioned TSV/plain lists compiled into the binary.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::textprep::{clean_text, sentence_split, tokenize, TokenStream, DEFAULT_ABBREVIATIONS};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PosTag {
    Noun,
    Verb,
    Adjective,
    Adverb,
    Pronoun,
    Other,
}

impl PosTag {
    pub const ALL: [PosTag; 6] = [
        PosTag::Noun,
        PosTag::Verb,
        PosTag::Adjective,
        PosTag::Adverb,
        PosTag::Pronoun,
        PosTag::Other,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PosTag::Noun => "noun",
            PosTag::Verb => "verb",
            PosTag::Adjective => "adjective",
            PosTag::Adverb => "adverb",
            PosTag::Pronoun => "pronoun",
            PosTag::Other => "other",
        }
    }
}

/// Five sentiment classes in increasing valence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SentimentClass {
    VeryNegative,
    Negative,
    Neutral,
    Positive,
    VeryPositive,
}

impl SentimentClass {
    pub const ALL: [SentimentClass; 5] = [
        SentimentClass::VeryNegative,
        SentimentClass::Negative,
        SentimentClass::Neutral,
        SentimentClass::Positive,
        SentimentClass::VeryPositive,
    ];

    pub fn index(&self) -> usize {
        match self {
            SentimentClass::VeryNegative => 0,
            SentimentClass::Negative => 1,
            SentimentClass::Neutral => 2,
            SentimentClass::Positive => 3,
            SentimentClass::VeryPositive => 4,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SentimentClass::VeryNegative => "very_negative",
            SentimentClass::Negative => "negative",
            SentimentClass::Neutral => "neutral",
            SentimentClass::Positive => "positive",
            SentimentClass::VeryPositive => "very_positive",
        }
    }
}

/// The compiled-in lexicons: word valence, tagged wordforms, and the three
/// tone category lists.
#[derive(Debug, Clone)]
pub struct Lexicons {
    pub valence: BTreeMap<String, f64>,
    pub pos: BTreeMap<String, PosTag>,
    pub self_reference: BTreeSet<String>,
    pub exclusive: BTreeSet<String>,
    pub discrepancy: BTreeSet<String>,
}

const VALENCE_TSV: &str = include_str!("data/valence.tsv");
const POS_TSV: &str = include_str!("data/pos_lexicon.tsv");
const SELF_REFERENCE_TXT: &str = include_str!("data/self_reference.txt");
const EXCLUSIVE_TXT: &str = include_str!("data/exclusive.txt");
const DISCREPANCY_TXT: &str = include_str!("data/discrepancy.txt");

fn data_lines(raw: &str) -> impl Iterator<Item = (usize, &str)> {
    raw.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_valence(raw: &str) -> Result<BTreeMap<String, f64>> {
    let mut map = BTreeMap::new();
    for (line, entry) in data_lines(raw) {
        let (word, value) = entry.split_once('\t').ok_or_else(|| Error::MalformedFile {
            what: "valence lexicon".into(),
            line,
            detail: "expected word<TAB>value".into(),
        })?;
        let value: f64 = value.parse().map_err(|_| Error::MalformedFile {
            what: "valence lexicon".into(),
            line,
            detail: format!("bad value `{value}`"),
        })?;
        if !(-1.0..=1.0).contains(&value) {
            return Err(Error::MalformedFile {
                what: "valence lexicon".into(),
                line,
                detail: format!("value {value} outside [-1, 1]"),
            });
        }
        map.insert(word.to_string(), value);
    }
    Ok(map)
}

fn parse_pos(raw: &str) -> Result<BTreeMap<String, PosTag>> {
    let mut map = BTreeMap::new();
    for (line, entry) in data_lines(raw) {
        let (word, tag) = entry.split_once('\t').ok_or_else(|| Error::MalformedFile {
            what: "pos lexicon".into(),
            line,
            detail: "expected word<TAB>tag".into(),
        })?;
        let tag = match tag {
            "noun" => PosTag::Noun,
            "verb" => PosTag::Verb,
            "adjective" => PosTag::Adjective,
            "adverb" => PosTag::Adverb,
            "pronoun" => PosTag::Pronoun,
            "other" => PosTag::Other,
            other => {
                return Err(Error::MalformedFile {
                    what: "pos lexicon".into(),
                    line,
                    detail: format!("unknown tag `{other}`"),
                })
            }
        };
        map.insert(word.to_string(), tag);
    }
    Ok(map)
}

fn parse_word_list(raw: &str) -> BTreeSet<String> {
    data_lines(raw).map(|(_, w)| w.to_string()).collect()
}

impl Lexicons {
    /// The lexicons shipped with the crate.
    pub fn builtin() -> &'static Lexicons {
        static BUILTIN: OnceLock<Lexicons> = OnceLock::new();
        BUILTIN.get_or_init(|| Lexicons {
            valence: parse_valence(VALENCE_TSV).expect("shipped valence lexicon parses"),
            pos: parse_pos(POS_TSV).expect("shipped pos lexicon parses"),
            self_reference: parse_word_list(SELF_REFERENCE_TXT),
            exclusive: parse_word_list(EXCLUSIVE_TXT),
            discrepancy: parse_word_list(DISCREPANCY_TXT),
        })
    }

    /// FNV-1a over every entry; changes whenever any lexicon changes.
    pub fn fingerprint(&self) -> String {
        let mut hash: u64 = 0xcbf29ce484222325;
        let mut eat = |bytes: &[u8]| {
            for &b in bytes {
                hash ^= b as u64;
                hash = hash.wrapping_mul(0x100000001b3);
            }
        };
        for (word, value) in &self.valence {
            eat(word.as_bytes());
            eat(&value.to_bits().to_le_bytes());
        }
        for (word, tag) in &self.pos {
            eat(word.as_bytes());
            eat(tag.as_str().as_bytes());
        }
        for set in [&self.self_reference, &self.exclusive, &self.discrepancy] {
            for word in set {
                eat(word.as_bytes());
                eat(b"\n");
            }
        }
        format!("{hash:016x}")
    }
}

const PRONOUNS: &[&str] = &[
    "anybody", "anyone", "anything", "everybody", "everyone", "everything", "he", "her", "hers",
    "herself", "him", "himself", "his", "i", "it", "its", "itself", "me", "mine", "my", "myself",
    "nobody", "nothing", "our", "ours", "ourselves", "she", "somebody", "someone", "something",
    "that", "their", "theirs", "them", "themselves", "these", "they", "this", "those", "us", "we",
    "who", "whom", "whose", "you", "your", "yours", "yourself",
];

const FUNCTION_VERBS: &[&str] = &[
    "am", "are", "be", "been", "being", "can", "could", "did", "do", "does", "doing", "had",
    "has", "have", "having", "is", "may", "might", "must", "shall", "should", "was", "were",
    "will", "would",
];

fn tag_one(token: &str, lexicons: &Lexicons) -> PosTag {
    if PRONOUNS.binary_search(&token).is_ok() {
        return PosTag::Pronoun;
    }
    if FUNCTION_VERBS.binary_search(&token).is_ok() {
        return PosTag::Verb;
    }
    if let Some(&tag) = lexicons.pos.get(token) {
        return tag;
    }
    if token.len() > 3 {
        if token.ends_with("ly") {
            return PosTag::Adverb;
        }
        if token.ends_with("ous") || token.ends_with("ful") || token.ends_with("ive") {
            return PosTag::Adjective;
        }
        if token.ends_with("tion") || token.ends_with("ness") || token.ends_with("ment") {
            return PosTag::Noun;
        }
    }
    PosTag::Other
}

/// Tag each token: closed classes first, then the shipped lexicon, then
/// suffix heuristics, then `other`. Requires unstemmed tokens — stemming
/// destroys the suffix cues.
pub fn tag_pos(tokens: &TokenStream, lexicons: &Lexicons) -> Result<Vec<PosTag>> {
    if tokens.stemmed {
        return Err(Error::InvalidConfig(
            "tag_pos requires unstemmed tokens".into(),
        ));
    }
    Ok(tokens
        .tokens
        .iter()
        .map(|t| tag_one(t, lexicons))
        .collect())
}

/// Map a mean valence onto the five classes. The classes partition the
/// line: < -0.5, [-0.5, -0.1), [-0.1, 0.1], (0.1, 0.5], > 0.5.
pub fn sentiment_from_mean(mean: f64) -> SentimentClass {
    if mean < -0.5 {
        SentimentClass::VeryNegative
    } else if mean < -0.1 {
        SentimentClass::Negative
    } else if mean <= 0.1 {
        SentimentClass::Neutral
    } else if mean <= 0.5 {
        SentimentClass::Positive
    } else {
        SentimentClass::VeryPositive
    }
}

/// Mean valence of lexicon-matched words; sentences with no matches are
/// neutral.
pub fn sentiment_of_sentence(sentence: &str, lexicons: &Lexicons) -> SentimentClass {
    let tokens = tokenize(&clean_text(sentence));
    let matched: Vec<f64> = tokens
        .tokens
        .iter()
        .filter_map(|t| lexicons.valence.get(t).copied())
        .collect();
    if matched.is_empty() {
        return SentimentClass::Neutral;
    }
    sentiment_from_mean(matched.iter().sum::<f64>() / matched.len() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LengthStats {
    pub word_mean: f64,
    pub word_std: f64,
    pub sentence_mean: f64,
    pub sentence_std: f64,
    pub word_samples: u64,
    pub sentence_samples: u64,
}

fn sample_std(n: u64, sum: f64, sumsq: f64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let n = n as f64;
    ((sumsq - sum * sum / n) / (n - 1.0)).max(0.0).sqrt()
}

fn mean(n: u64, sum: f64) -> f64 {
    if n == 0 {
        0.0
    } else {
        sum / n as f64
    }
}

/// Word length in characters over cleaned tokens; sentence length in
/// tokens per split sentence. Empty documents give zero-sample stats.
pub fn length_stats(doc: &str) -> LengthStats {
    let mut acc = LengthAccumulator::default();
    acc.add(doc);
    acc.stats()
}

/// Running sums behind `LengthStats`, additive over articles.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct LengthAccumulator {
    pub word_n: u64,
    pub word_sum: f64,
    pub word_sumsq: f64,
    pub sentence_n: u64,
    pub sentence_sum: f64,
    pub sentence_sumsq: f64,
}

impl LengthAccumulator {
    pub fn add(&mut self, doc: &str) {
        for sentence in sentence_split(doc, DEFAULT_ABBREVIATIONS) {
            let tokens = tokenize(&clean_text(&sentence));
            if tokens.is_empty() {
                continue;
            }
            let len = tokens.len() as f64;
            self.sentence_n += 1;
            self.sentence_sum += len;
            self.sentence_sumsq += len * len;
            for token in &tokens.tokens {
                let chars = token.len() as f64;
                self.word_n += 1;
                self.word_sum += chars;
                self.word_sumsq += chars * chars;
            }
        }
    }

    pub fn merge(&mut self, other: &LengthAccumulator) {
        self.word_n += other.word_n;
        self.word_sum += other.word_sum;
        self.word_sumsq += other.word_sumsq;
        self.sentence_n += other.sentence_n;
        self.sentence_sum += other.sentence_sum;
        self.sentence_sumsq += other.sentence_sumsq;
    }

    pub fn stats(&self) -> LengthStats {
        LengthStats {
            word_mean: mean(self.word_n, self.word_sum),
            word_std: sample_std(self.word_n, self.word_sum, self.word_sumsq),
            sentence_mean: mean(self.sentence_n, self.sentence_sum),
            sentence_std: sample_std(self.sentence_n, self.sentence_sum, self.sentence_sumsq),
            word_samples: self.word_n,
            sentence_samples: self.sentence_n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToneSummary {
    /// Self-reference + exclusive − discrepancy rates mapped onto [0,100]
    /// with midpoint 50 (affine slope 250 per unit rate, then clamped).
    pub authenticity: f64,
    /// 50 + 50·(pos − neg)/(pos + neg + ε) over valence-matched rates.
    pub emotional_tone: f64,
    /// Heylighen-style F proxy from the coarse tags; reported, untested
    /// against any external scale.
    pub formality: f64,
}

const TONE_EPSILON: f64 = 1e-9;
const AUTHENTICITY_SLOPE: f64 = 250.0;

pub fn tone_summary(doc: &str, lexicons: &Lexicons) -> ToneSummary {
    let tokens = tokenize(&clean_text(doc));
    let total = tokens.len() as f64;
    if tokens.is_empty() {
        return ToneSummary { authenticity: 50.0, emotional_tone: 50.0, formality: 50.0 };
    }
    let mut pos_hits = 0.0;
    let mut neg_hits = 0.0;
    let mut self_ref = 0.0;
    let mut exclusive = 0.0;
    let mut discrepancy = 0.0;
    let mut tag_counts = [0.0f64; 6];
    for token in &tokens.tokens {
        if let Some(&v) = lexicons.valence.get(token) {
            if v > 0.0 {
                pos_hits += 1.0;
            } else if v < 0.0 {
                neg_hits += 1.0;
            }
        }
        if lexicons.self_reference.contains(token) {
            self_ref += 1.0;
        }
        if lexicons.exclusive.contains(token) {
            exclusive += 1.0;
        }
        if lexicons.discrepancy.contains(token) {
            discrepancy += 1.0;
        }
        tag_counts[tag_one(token, lexicons) as usize] += 1.0;
    }
    let pos_rate = pos_hits / total;
    let neg_rate = neg_hits / total;
    let emotional_tone =
        (50.0 + 50.0 * (pos_rate - neg_rate) / (pos_rate + neg_rate + TONE_EPSILON))
            .clamp(0.0, 100.0);
    let authenticity = (50.0
        + AUTHENTICITY_SLOPE * ((self_ref + exclusive - discrepancy) / total))
        .clamp(0.0, 100.0);
    let noun = tag_counts[PosTag::Noun as usize] / total;
    let adjective = tag_counts[PosTag::Adjective as usize] / total;
    let verb = tag_counts[PosTag::Verb as usize] / total;
    let adverb = tag_counts[PosTag::Adverb as usize] / total;
    let pronoun = tag_counts[PosTag::Pronoun as usize] / total;
    let formality =
        (50.0 * (1.0 + noun + adjective - verb - adverb - pronoun)).clamp(0.0, 100.0);
    ToneSummary { authenticity, emotional_tone, formality }
}

/// Per-tag token counts for one corpus side.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct PosProfile {
    pub noun: u64,
    pub verb: u64,
    pub adjective: u64,
    pub adverb: u64,
    pub pronoun: u64,
    pub other: u64,
}

impl PosProfile {
    pub fn count(&self, tag: PosTag) -> u64 {
        match tag {
            PosTag::Noun => self.noun,
            PosTag::Verb => self.verb,
            PosTag::Adjective => self.adjective,
            PosTag::Adverb => self.adverb,
            PosTag::Pronoun => self.pronoun,
            PosTag::Other => self.other,
        }
    }

    pub fn total(&self) -> u64 {
        self.noun + self.verb + self.adjective + self.adverb + self.pronoun + self.other
    }

    fn bump(&mut self, tag: PosTag) {
        match tag {
            PosTag::Noun => self.noun += 1,
            PosTag::Verb => self.verb += 1,
            PosTag::Adjective => self.adjective += 1,
            PosTag::Adverb => self.adverb += 1,
            PosTag::Pronoun => self.pronoun += 1,
            PosTag::Other => self.other += 1,
        }
    }

    pub fn merge(&mut self, other: &PosProfile) {
        self.noun += other.noun;
        self.verb += other.verb;
        self.adjective += other.adjective;
        self.adverb += other.adverb;
        self.pronoun += other.pronoun;
        self.other += other.other;
    }
}

/// Aggregated linguistic features for one corpus side. Built by summing
/// per-article contributions, so it is permutation-invariant and additive
/// over disjoint article sets.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CorpusProfile {
    pub articles: u64,
    pub pos: PosProfile,
    /// Sentence counts per `SentimentClass`, in class order.
    pub sentiment: [u64; 5],
    pub lengths: LengthAccumulator,
    pub tone_n: u64,
    pub authenticity_sum: f64,
    pub authenticity_sumsq: f64,
    pub emotional_tone_sum: f64,
    pub emotional_tone_sumsq: f64,
}

impl CorpusProfile {
    pub fn add_article(&mut self, doc: &str, lexicons: &Lexicons) {
        self.articles += 1;
        let tokens = tokenize(&clean_text(doc));
        for token in &tokens.tokens {
            self.pos.bump(tag_one(token, lexicons));
        }
        for sentence in sentence_split(doc, DEFAULT_ABBREVIATIONS) {
            if tokenize(&clean_text(&sentence)).is_empty() {
                continue;
            }
            self.sentiment[sentiment_of_sentence(&sentence, lexicons).index()] += 1;
        }
        self.lengths.add(doc);
        let tone = tone_summary(doc, lexicons);
        self.tone_n += 1;
        self.authenticity_sum += tone.authenticity;
        self.authenticity_sumsq += tone.authenticity * tone.authenticity;
        self.emotional_tone_sum += tone.emotional_tone;
        self.emotional_tone_sumsq += tone.emotional_tone * tone.emotional_tone;
    }

    pub fn merge(&mut self, other: &CorpusProfile) {
        self.articles += other.articles;
        self.pos.merge(&other.pos);
        for (a, b) in self.sentiment.iter_mut().zip(&other.sentiment) {
            *a += b;
        }
        self.lengths.merge(&other.lengths);
        self.tone_n += other.tone_n;
        self.authenticity_sum += other.authenticity_sum;
        self.authenticity_sumsq += other.authenticity_sumsq;
        self.emotional_tone_sum += other.emotional_tone_sum;
        self.emotional_tone_sumsq += other.emotional_tone_sumsq;
    }

    pub fn length_stats(&self) -> LengthStats {
        self.lengths.stats()
    }

    /// (mean, sample std, n) of per-article authenticity.
    pub fn authenticity_stats(&self) -> (f64, f64, u64) {
        (
            mean(self.tone_n, self.authenticity_sum),
            sample_std(self.tone_n, self.authenticity_sum, self.authenticity_sumsq),
            self.tone_n,
        )
    }

    /// (mean, sample std, n) of per-article emotional tone.
    pub fn emotional_tone_stats(&self) -> (f64, f64, u64) {
        (
            mean(self.tone_n, self.emotional_tone_sum),
            sample_std(self.tone_n, self.emotional_tone_sum, self.emotional_tone_sumsq),
            self.tone_n,
        )
    }
}

pub fn corpus_profile(articles: &[&str], lexicons: &Lexicons) -> Result<CorpusProfile> {
    if articles.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut profile = CorpusProfile::default();
    for doc in articles {
        profile.add_article(doc, lexicons);
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn stream(tokens: &[&str]) -> TokenStream {
        TokenStream {
            tokens: tokens.iter().map(|t| t.to_string()).collect(),
            stemmed: false,
        }
    }

    #[test]
    fn closed_class_lists_are_sorted_for_binary_search() {
        assert!(PRONOUNS.windows(2).all(|w| w[0] < w[1]));
        assert!(FUNCTION_VERBS.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn suffix_and_closed_class_rules() {
        let lex = Lexicons::builtin();
        let tags = tag_pos(&stream(&["quickly", "she", "famous", "investigation"]), lex).unwrap();
        assert_eq!(
            tags,
            vec![PosTag::Adverb, PosTag::Pronoun, PosTag::Adjective, PosTag::Noun]
        );
    }

    #[test]
    fn stemmed_tokens_rejected() {
        let lex = Lexicons::builtin();
        let mut s = stream(&["quickli"]);
        s.stemmed = true;
        assert!(tag_pos(&s, lex).is_err());
    }

    #[test]
    fn hand_tagged_sentence() {
        // she/PRON quickly/ADV read/V the/ADJ famous/ADJ report/N and/OTHER
        // found/V its/PRON investigation/N dangerous/ADJ yesterday/ADV
        // (articles count as limiting adjectives, as in school grammar)
        let lex = Lexicons::builtin();
        let tokens = stream(&[
            "she", "quickly", "read", "the", "famous", "report", "and", "found", "its",
            "investigation", "dangerous", "yesterday",
        ]);
        let expected = [
            PosTag::Pronoun,
            PosTag::Adverb,
            PosTag::Verb,
            PosTag::Adjective,
            PosTag::Adjective,
            PosTag::Noun,
            PosTag::Other,
            PosTag::Verb,
            PosTag::Pronoun,
            PosTag::Noun,
            PosTag::Adjective,
            PosTag::Adverb,
        ];
        let tags = tag_pos(&tokens, lex).unwrap();
        let correct = tags.iter().zip(&expected).filter(|(a, b)| a == b).count();
        assert!(correct >= 10, "only {correct}/12 tags correct: {tags:?}");
    }

    #[test]
    fn other_rate_bounded_on_english_fixture() {
        let lex = Lexicons::builtin();
        let text = include_str!("../tests/fixtures/english_sample.txt");
        let tokens = tokenize(&clean_text(text));
        let tags = tag_pos(&tokens, lex).unwrap();
        let other = tags.iter().filter(|t| **t == PosTag::Other).count();
        let rate = other as f64 / tags.len() as f64;
        assert!(rate <= 0.40, "other rate {rate:.3} exceeds 0.40");
    }

    #[test]
    fn sentiment_class_boundaries() {
        assert_eq!(sentiment_from_mean(-0.51), SentimentClass::VeryNegative);
        assert_eq!(sentiment_from_mean(-0.5), SentimentClass::Negative);
        assert_eq!(sentiment_from_mean(-0.1), SentimentClass::Neutral);
        assert_eq!(sentiment_from_mean(0.1), SentimentClass::Neutral);
        assert_eq!(sentiment_from_mean(0.10001), SentimentClass::Positive);
        assert_eq!(sentiment_from_mean(0.5), SentimentClass::Positive);
        assert_eq!(sentiment_from_mean(0.50001), SentimentClass::VeryPositive);
    }

    #[test]
    fn sentence_sentiment() {
        let lex = Lexicons::builtin();
        // excellent, wonderful and great all carry valence +1.0
        assert_eq!(
            sentiment_of_sentence("Excellent, wonderful, great!", lex),
            SentimentClass::VeryPositive
        );
        assert_eq!(
            sentiment_of_sentence("the of and", lex),
            SentimentClass::Neutral
        );
        // great (1.0) + dismal (-0.35) -> mean 0.325
        assert_eq!(
            sentiment_of_sentence("a great but dismal day", lex),
            SentimentClass::Positive
        );
    }

    #[test]
    fn length_stats_hand_arithmetic() {
        // words ab abcd a abc abcde -> lengths 2 4 1 3 5, mean 3.0
        // sentences of 2 and 3 tokens -> mean 2.5
        let stats = length_stats("ab abcd. a abc abcde.");
        assert_abs_diff_eq!(stats.word_mean, 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(stats.sentence_mean, 2.5, epsilon = 1e-12);
        assert_eq!(stats.word_samples, 5);
        assert_eq!(stats.sentence_samples, 2);
    }

    #[test]
    fn length_stats_single_word_and_empty() {
        let stats = length_stats("hello");
        assert_eq!(stats.word_mean, 5.0);
        assert_eq!(stats.sentence_mean, 1.0);
        assert_eq!(stats.word_std, 0.0);

        let empty = length_stats("");
        assert_eq!(empty.word_samples, 0);
        assert_eq!(empty.sentence_samples, 0);
        assert_eq!(empty.word_mean, 0.0);
    }

    #[test]
    fn tone_limits() {
        let lex = Lexicons::builtin();
        let positive_only = tone_summary("excellent wonderful great", lex);
        assert!(positive_only.emotional_tone > 99.9);
        let no_matches = tone_summary("zebra quartz fjord", lex);
        assert_abs_diff_eq!(no_matches.authenticity, 50.0, epsilon = 1e-12);
        assert_abs_diff_eq!(no_matches.emotional_tone, 50.0, epsilon = 1e-12);
    }

    #[test]
    fn tone_hand_traced_rates() {
        // 10 tokens: we (self-reference), could (discrepancy), without
        // (exclusive) -> rates 0.1 each
        // authenticity = 50 + 250*(0.1 + 0.1 - 0.1) = 75
        // calm is the only valence match (positive) -> tone ~ 100
        let lex = Lexicons::builtin();
        let tone = tone_summary("we agree that people could stay calm without much trouble", lex);
        assert_abs_diff_eq!(tone.authenticity, 75.0, epsilon = 1e-9);
        assert!((tone.emotional_tone - 100.0).abs() < 1e-5);
    }

    #[test]
    fn tone_bounds_clamped() {
        let lex = Lexicons::builtin();
        // heavy self-reference pushes the affine map past 100; must clamp
        let tone = tone_summary("i me my we us our i me my we", lex);
        assert_eq!(tone.authenticity, 100.0);
        let low = tone_summary("should would could hope wish want need if", lex);
        assert_eq!(low.authenticity, 0.0);
    }

    #[test]
    fn profile_single_article_matches_parts() {
        let lex = Lexicons::builtin();
        let doc = "The mayor announced a wonderful plan. People were happy.";
        let profile = corpus_profile(&[doc], lex).unwrap();
        assert_eq!(profile.articles, 1);
        assert_eq!(profile.length_stats(), length_stats(doc));
        let tone = tone_summary(doc, lex);
        let (auth_mean, auth_std, n) = profile.authenticity_stats();
        assert_eq!(n, 1);
        assert_abs_diff_eq!(auth_mean, tone.authenticity, epsilon = 1e-12);
        assert_eq!(auth_std, 0.0);
        let sentences: u64 = profile.sentiment.iter().sum();
        assert_eq!(sentences, 2);
    }

    #[test]
    fn profile_is_permutation_invariant_and_additive() {
        let lex = Lexicons::builtin();
        let docs = [
            "A terrible storm destroyed the old bridge yesterday.",
            "We hope the city council will quickly approve the wonderful plan.",
            "Nothing happened. The meeting was quiet and short.",
        ];
        let forward = corpus_profile(&[docs[0], docs[1], docs[2]], lex).unwrap();
        let shuffled = corpus_profile(&[docs[2], docs[0], docs[1]], lex).unwrap();
        assert_eq!(forward, shuffled);

        let mut merged = corpus_profile(&[docs[0]], lex).unwrap();
        merged.merge(&corpus_profile(&[docs[1], docs[2]], lex).unwrap());
        assert_eq!(forward, merged);
    }

    #[test]
    fn profile_empty_side_rejected() {
        assert!(matches!(
            corpus_profile(&[], Lexicons::builtin()),
            Err(Error::EmptyCorpus)
        ));
    }

    #[test]
    fn pos_counts_sum_to_total() {
        let lex = Lexicons::builtin();
        let text = include_str!("../tests/fixtures/english_sample.txt");
        let mut profile = CorpusProfile::default();
        profile.add_article(text, lex);
        let tokens = tokenize(&clean_text(text));
        assert_eq!(profile.pos.total(), tokens.len() as u64);
    }

    #[test]
    fn lexicon_fingerprint_is_stable() {
        let a = Lexicons::builtin().fingerprint();
        let b = Lexicons::builtin().fingerprint();
        assert_eq!(a, b);
        assert_eq!(a.len(), 16);
    }
}
