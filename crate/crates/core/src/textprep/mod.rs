//! Text normalization: URL stripping, lowercasing, tokenization, Porter
//! stemming, truncation to the first `X` words, and sentence segmentation
//! for the feature-analysis path.
//!
//! Pipeline order is fixed. Classification path:
//! extract → boilerplate → [`clean_text`] → [`tokenize`] → stem → truncate.
//! Feature path: extract → boilerplate → [`sentence_split`], then
//! per-sentence clean/tokenize.

pub mod porter;

use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use porter::stem;

/// An ordered stream of lowercase alphabetic tokens.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenStream {
    pub tokens: Vec<String>,
    pub stemmed: bool,
}

impl TokenStream {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

/// Word-count and cleaning options for the classification path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrepConfig {
    /// Number of leading tokens kept per article (X).
    pub word_count: u32,
    /// Strip URL substrings before removing non-alphabetic characters.
    pub strip_urls: bool,
}

impl PrepConfig {
    pub fn new(word_count: u32) -> Result<Self> {
        if word_count == 0 {
            return Err(Error::InvalidConfig("word count X must be positive".into()));
        }
        Ok(PrepConfig { word_count, strip_urls: true })
    }
}

fn url_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"(?i)\bhttps?\S*").unwrap())
}

/// Normalize raw text: delete URL substrings (scheme through the next
/// whitespace), replace every non-alphabetic character with a space,
/// lowercase, collapse runs of spaces.
pub fn clean_text(text: &str) -> String {
    let without_urls = url_regex().replace_all(text, " ");
    let mut out = String::with_capacity(without_urls.len());
    let mut pending_space = false;
    for ch in without_urls.chars() {
        if ch.is_ascii_alphabetic() {
            if pending_space && !out.is_empty() {
                out.push(' ');
            }
            pending_space = false;
            out.push(ch.to_ascii_lowercase());
        } else {
            pending_space = true;
        }
    }
    out
}

/// Whitespace-split a cleaned string; empty tokens are dropped.
pub fn tokenize(text: &str) -> TokenStream {
    TokenStream {
        tokens: text.split_whitespace().map(str::to_string).collect(),
        stemmed: false,
    }
}

/// Porter-stem every token, preserving order.
pub fn stem_stream(stream: &TokenStream) -> TokenStream {
    TokenStream {
        tokens: stream.tokens.iter().map(|t| stem(t)).collect(),
        stemmed: true,
    }
}

/// Keep the first `min(x, len)` tokens.
pub fn truncate(stream: &TokenStream, x: u32) -> TokenStream {
    TokenStream {
        tokens: stream.tokens.iter().take(x as usize).cloned().collect(),
        stemmed: stream.stemmed,
    }
}

/// Run the whole classification-path preparation on boilerplate-free text.
pub fn prepare(text: &str, config: &PrepConfig) -> TokenStream {
    let cleaned = if config.strip_urls {
        clean_text(text)
    } else {
        // still lowercases and strips non-alphabetics; only URL deletion is skipped
        let mut out = String::with_capacity(text.len());
        let mut pending = false;
        for ch in text.chars() {
            if ch.is_ascii_alphabetic() {
                if pending && !out.is_empty() {
                    out.push(' ');
                }
                pending = false;
                out.push(ch.to_ascii_lowercase());
            } else {
                pending = true;
            }
        }
        out
    };
    truncate(&stem_stream(&tokenize(&cleaned)), config.word_count)
}

/// Abbreviations that suppress a sentence break after their period.
pub const DEFAULT_ABBREVIATIONS: &[&str] = &[
    "dr", "mr", "mrs", "ms", "prof", "gen", "gov", "sen", "rep", "sgt", "col", "lt", "st", "jr",
    "sr", "vs", "etc", "inc", "ltd", "corp", "co", "dept", "univ", "approx", "jan", "feb", "mar",
    "apr", "jun", "jul", "aug", "sept", "oct", "nov", "dec", "u.s", "u.k", "e.g", "i.e",
];

/// Split raw (punctuated) text into sentences on `.`, `!`, `?` followed by
/// whitespace or end of text, guarded by an abbreviation list.
pub fn sentence_split(text: &str, abbreviations: &[&str]) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut sentences = Vec::new();
    let mut start = 0;
    for i in 0..chars.len() {
        let c = chars[i];
        if !matches!(c, '.' | '!' | '?') {
            continue;
        }
        let at_boundary = i + 1 == chars.len() || chars[i + 1].is_whitespace();
        if !at_boundary {
            continue;
        }
        if c == '.' && is_guarded(&chars[start..i], abbreviations) {
            continue;
        }
        let sentence: String = chars[start..=i].iter().collect();
        let sentence = sentence.trim();
        if !sentence.is_empty() {
            sentences.push(sentence.to_string());
        }
        start = i + 1;
    }
    let tail: String = chars[start.min(chars.len())..].iter().collect();
    let tail = tail.trim();
    if !tail.is_empty() {
        sentences.push(tail.to_string());
    }
    sentences
}

/// Does the text before a period end in a guarded abbreviation?
fn is_guarded(before: &[char], abbreviations: &[&str]) -> bool {
    let mut word_start = before.len();
    while word_start > 0 {
        let c = before[word_start - 1];
        if c.is_alphabetic() || c == '.' {
            word_start -= 1;
        } else {
            break;
        }
    }
    let word: String = before[word_start..].iter().collect::<String>().to_lowercase();
    abbreviations
        .iter()
        .any(|a| word == a.trim_end_matches('.').to_lowercase())
}
