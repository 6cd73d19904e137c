//! Seeded synthetic corpus generator with known ground truth.
//!
//! Two unigram distributions over the same 1,200-word pseudo-word pool
//! with total-variation distance exactly 0.25, a planted 1.4× adverb-rate
//! gap, and ten marker words whose rates differ 3× between sides. Word
//! lengths, sentence lengths, and sentence sentiment are scheduled
//! deterministically and identically on both sides, so those features
//! carry no signal by construction.
//!
//! Pseudo-words are alternating consonant/vowel strings (vowels a/i/o/u
//! only) so every word is its own Porter fixed point; adverb words append
//! `ly`. Each side draws words from three probability strata:
//!
//!   credible: set A 0.375, set B 0.125, shared 0.5
//!   fake:     set A 0.125, set B 0.375, shared 0.5
//!
//! Within-set conditionals are identical across sides, which pins the
//! total-variation distance at 0.25 regardless of set composition.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::{ArticleRecord, Corpus, Label};
use crate::textprep::porter::stem;
use crate::vocab::FunctionWordList;
use crate::Result;

const WORDS_PER_PARITY_SET: usize = 200;
const MARKERS_PER_PARITY: usize = 5;
const ADVERBS_PER_PARITY: usize = 16;

/// Per-word conditional mass inside a set-parity subpool.
const MARKER_CONDITIONAL: f64 = 0.032;
const ADVERB_MASS: f64 = 0.08;

/// Stratum masses per side: (set A, set B, shared).
pub const CREDIBLE_MASSES: [f64; 3] = [0.375, 0.125, 0.5];
pub const FAKE_MASSES: [f64; 3] = [0.125, 0.375, 0.5];

/// Deterministic sentence-length schedule; cycled and truncated to fill
/// each article to exactly `words_per_article` tokens.
const SENTENCE_CYCLE: [usize; 5] = [12, 9, 15, 10, 14];

/// One sentiment-palette word per sentence, all six letters long and all
/// present in the shipped valence lexicon, covering the five classes.
const PALETTE: [&str; 5] = ["horrid", "dismal", "placid", "decent", "superb"];

const CONSONANTS: &[u8] = b"bdfgklmnprstvz";
const VOWELS: &[u8] = b"aiou";

/// A word plus its conditional probability within its parity subpool.
#[derive(Debug, Clone)]
pub struct PoolWord {
    pub word: String,
    pub conditional: f64,
    pub is_adverb: bool,
    pub is_marker: bool,
}

/// The fixed word pool: three sets × two parities (six-letter words for
/// even sentence positions, eight-letter for odd).
#[derive(Debug, Clone)]
pub struct WordPools {
    /// [set][parity] -> subpool; sets are A, B, shared.
    pub subpools: [[Vec<PoolWord>; 2]; 3],
}

fn make_base(rng: &mut ChaCha8Rng, syllables: usize) -> String {
    let mut word = String::with_capacity(syllables * 2);
    for _ in 0..syllables {
        word.push(CONSONANTS[rng.gen_range(0..CONSONANTS.len())] as char);
        word.push(VOWELS[rng.gen_range(0..VOWELS.len())] as char);
    }
    word
}

fn build_pools() -> WordPools {
    // fixed internal seed: the pool is part of the design, not the run
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15);
    let stopwords = FunctionWordList::builtin();
    let mut used_stems = std::collections::BTreeSet::new();
    let mut draw = |rng: &mut ChaCha8Rng, letters: usize, adverb: bool| -> String {
        loop {
            let word = if adverb {
                let mut w = make_base(rng, letters / 2 - 1);
                w.push_str("ly");
                w
            } else {
                make_base(rng, letters / 2)
            };
            let stemmed = stem(&word);
            if !adverb && stemmed != word {
                continue; // keep non-adverbs as Porter fixed points
            }
            if stopwords.contains(&word) || !used_stems.insert(stemmed) {
                continue;
            }
            return word;
        }
    };

    let subpools = [0usize, 1, 2].map(|set| {
        [0usize, 1].map(|parity| {
            let letters = if parity == 0 { 6 } else { 8 };
            let mut pool = Vec::with_capacity(WORDS_PER_PARITY_SET);
            let (markers, adverbs) = match set {
                1 => (MARKERS_PER_PARITY, ADVERBS_PER_PARITY),
                2 => (0, ADVERBS_PER_PARITY),
                _ => (0, 0),
            };
            let generic = WORDS_PER_PARITY_SET - markers - adverbs;
            let generic_mass = 1.0 - markers as f64 * MARKER_CONDITIONAL
                - if adverbs > 0 { ADVERB_MASS } else { 0.0 };
            for _ in 0..markers {
                pool.push(PoolWord {
                    word: draw(&mut rng, letters, false),
                    conditional: MARKER_CONDITIONAL,
                    is_adverb: false,
                    is_marker: true,
                });
            }
            for _ in 0..adverbs {
                pool.push(PoolWord {
                    word: draw(&mut rng, letters, true),
                    conditional: ADVERB_MASS / adverbs as f64,
                    is_adverb: true,
                    is_marker: false,
                });
            }
            for _ in 0..generic {
                pool.push(PoolWord {
                    word: draw(&mut rng, letters, false),
                    conditional: generic_mass / generic as f64,
                    is_adverb: false,
                    is_marker: false,
                });
            }
            pool
        })
    });
    WordPools { subpools }
}

impl WordPools {
    pub fn design() -> &'static WordPools {
        static POOLS: OnceLock<WordPools> = OnceLock::new();
        POOLS.get_or_init(build_pools)
    }

    pub fn words(&self) -> impl Iterator<Item = &PoolWord> {
        self.subpools.iter().flatten().flatten()
    }

    /// The ten planted marker words.
    pub fn markers(&self) -> Vec<&str> {
        self.words()
            .filter(|w| w.is_marker)
            .map(|w| w.word.as_str())
            .collect()
    }

    fn distribution(&self, masses: &[f64; 3]) -> BTreeMap<String, f64> {
        let mut dist = BTreeMap::new();
        for (set, subpools) in self.subpools.iter().enumerate() {
            for subpool in subpools {
                for w in subpool {
                    // parities are weighted equally in the nominal design
                    *dist.entry(w.word.clone()).or_insert(0.0) +=
                        masses[set] * 0.5 * w.conditional;
                }
            }
        }
        dist
    }

    /// Nominal unigram distribution of sampled tokens on the credible side.
    pub fn credible_distribution(&self) -> BTreeMap<String, f64> {
        self.distribution(&CREDIBLE_MASSES)
    }

    pub fn fake_distribution(&self) -> BTreeMap<String, f64> {
        self.distribution(&FAKE_MASSES)
    }

    /// Nominal adverb fraction of sampled tokens for one side.
    pub fn adverb_rate(&self, label: Label) -> f64 {
        let masses = match label {
            Label::Credible => &CREDIBLE_MASSES,
            Label::Fake => &FAKE_MASSES,
        };
        let mut rate = 0.0;
        for (set, subpools) in self.subpools.iter().enumerate() {
            for subpool in subpools {
                for w in subpool.iter().filter(|w| w.is_adverb) {
                    rate += masses[set] * 0.5 * w.conditional;
                }
            }
        }
        rate
    }
}

/// Total variation distance between two distributions over the same keys.
pub fn total_variation(p: &BTreeMap<String, f64>, q: &BTreeMap<String, f64>) -> f64 {
    let mut sum = 0.0;
    for (word, &pv) in p {
        sum += (pv - q.get(word).copied().unwrap_or(0.0)).abs();
    }
    for (word, &qv) in q {
        if !p.contains_key(word) {
            sum += qv;
        }
    }
    0.5 * sum
}

#[derive(Debug, Clone, Copy)]
pub struct SynthConfig {
    pub articles_per_side: usize,
    pub sources_per_side: usize,
    pub words_per_article: usize,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            articles_per_side: 1000,
            sources_per_side: 10,
            words_per_article: 150,
            seed: 0,
        }
    }
}

fn sentence_lengths(total: usize) -> Vec<usize> {
    let mut lengths = Vec::new();
    let mut remaining = total;
    let mut i = 0;
    while remaining > 0 {
        let len = SENTENCE_CYCLE[i % SENTENCE_CYCLE.len()].min(remaining);
        // avoid a trailing one-word sentence fragment
        let len = if remaining - len == 1 { len + 1 } else { len };
        lengths.push(len);
        remaining -= len;
        i += 1;
    }
    lengths
}

struct Sampler<'a> {
    pools: &'a WordPools,
    set_choice: [WeightedIndex<f64>; 2],
    word_choice: Vec<[WeightedIndex<f64>; 2]>,
}

impl<'a> Sampler<'a> {
    fn new(pools: &'a WordPools) -> Sampler<'a> {
        let set_choice = [
            WeightedIndex::new(CREDIBLE_MASSES).expect("valid weights"),
            WeightedIndex::new(FAKE_MASSES).expect("valid weights"),
        ];
        let word_choice = pools
            .subpools
            .iter()
            .map(|subpools| {
                [0usize, 1].map(|parity| {
                    WeightedIndex::new(subpools[parity].iter().map(|w| w.conditional))
                        .expect("valid weights")
                })
            })
            .collect();
        Sampler { pools, set_choice, word_choice }
    }

    fn sample(&self, rng: &mut ChaCha8Rng, label: Label, parity: usize) -> &'a str {
        let side = usize::from(label == Label::Fake);
        let set = self.set_choice[side].sample(rng);
        let word = self.word_choice[set][parity].sample(rng);
        &self.pools.subpools[set][parity][word].word
    }
}

fn render_article(
    rng: &mut ChaCha8Rng,
    sampler: &Sampler<'_>,
    label: Label,
    article_index: usize,
    words_per_article: usize,
) -> String {
    let mut paragraphs = Vec::new();
    for (s, len) in sentence_lengths(words_per_article).into_iter().enumerate() {
        let mut words = Vec::with_capacity(len);
        // position 0 carries the scheduled sentiment-palette word; the
        // schedule depends only on the article index, so both sides get
        // identical sentiment, length, and tone profiles
        words.push(PALETTE[(article_index + s) % PALETTE.len()].to_string());
        for position in 1..len {
            words.push(sampler.sample(rng, label, position % 2).to_string());
        }
        let mut sentence = words.join(" ");
        sentence[..1].make_ascii_uppercase();
        sentence.push('.');
        paragraphs.push(format!("<p>{sentence}</p>"));
    }
    format!(
        "<html><head><title>article {article_index}</title></head><body>\n\
         <div class=\"nav\">Home | World | Local</div>\n{}\n\
         <div class=\"footer\">All rights reserved.</div>\n</body></html>",
        paragraphs.join("\n")
    )
}

/// Generate the full two-sided corpus. Articles interleave credible/fake
/// so a single seeded stream drives both sides.
pub fn generate(config: &SynthConfig) -> Result<Corpus> {
    let pools = WordPools::design();
    let sampler = Sampler::new(pools);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut articles = Vec::with_capacity(config.articles_per_side * 2);
    for index in 0..config.articles_per_side {
        for label in [Label::Credible, Label::Fake] {
            let html = render_article(&mut rng, &sampler, label, index, config.words_per_article);
            let source = index % config.sources_per_side;
            articles.push(ArticleRecord {
                id: format!("{}/{:02}/{:05}", label.as_str(), source, index),
                source_id: format!("{}-src-{:02}", label.as_str(), source),
                label,
                url: String::new(),
                published_at: None,
                raw_html: Some(html),
                raw_text: None,
            });
        }
    }
    Corpus::new(articles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textprep::{clean_text, tokenize};

    #[test]
    fn pool_shape() {
        let pools = WordPools::design();
        assert_eq!(pools.words().count(), 1200);
        assert_eq!(pools.markers().len(), 10);
        let adverbs = pools.words().filter(|w| w.is_adverb).count();
        assert_eq!(adverbs, 4 * ADVERBS_PER_PARITY);
        for (set, subpools) in pools.subpools.iter().enumerate() {
            for subpool in subpools {
                assert_eq!(subpool.len(), WORDS_PER_PARITY_SET, "set {set}");
                let mass: f64 = subpool.iter().map(|w| w.conditional).sum();
                assert!((mass - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn stems_are_unique_across_the_pool() {
        let pools = WordPools::design();
        let stems: std::collections::BTreeSet<String> =
            pools.words().map(|w| stem(&w.word)).collect();
        assert_eq!(stems.len(), 1200);
    }

    #[test]
    fn adverbs_end_in_ly_and_nothing_else_does() {
        let pools = WordPools::design();
        for w in pools.words() {
            assert_eq!(w.word.ends_with("ly"), w.is_adverb, "{}", w.word);
        }
    }

    #[test]
    fn total_variation_is_a_quarter() {
        let pools = WordPools::design();
        let p = pools.credible_distribution();
        let q = pools.fake_distribution();
        assert_eq!(p.len(), 1200);
        let p_sum: f64 = p.values().sum();
        assert!((p_sum - 1.0).abs() < 1e-12);
        assert!((total_variation(&p, &q) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn planted_adverb_gap_is_forty_percent() {
        let pools = WordPools::design();
        let credible = pools.adverb_rate(Label::Credible);
        let fake = pools.adverb_rate(Label::Fake);
        assert!((credible - 0.05).abs() < 1e-12);
        assert!((fake - 0.07).abs() < 1e-12);
        assert!((fake / credible - 1.4).abs() < 1e-12);
    }

    #[test]
    fn articles_have_exact_token_counts() {
        let config = SynthConfig { articles_per_side: 3, ..Default::default() };
        let corpus = generate(&config).unwrap();
        assert_eq!(corpus.len(), 6);
        for article in &corpus.articles {
            let tokens = tokenize(&clean_text(&article.body()));
            assert_eq!(tokens.len(), 150, "article {}", article.id);
        }
    }

    #[test]
    fn word_lengths_are_position_scheduled() {
        // both sides must produce the identical length sequence
        let config = SynthConfig { articles_per_side: 2, ..Default::default() };
        let corpus = generate(&config).unwrap();
        let lengths: Vec<Vec<usize>> = corpus
            .articles
            .iter()
            .map(|a| {
                tokenize(&clean_text(&a.body()))
                    .tokens
                    .iter()
                    .map(|t| t.len())
                    .collect()
            })
            .collect();
        for other in &lengths[1..] {
            assert_eq!(&lengths[0], other);
        }
    }

    #[test]
    fn generation_is_seed_deterministic() {
        let config = SynthConfig { articles_per_side: 5, ..Default::default() };
        let a = generate(&config).unwrap();
        let b = generate(&config).unwrap();
        for (x, y) in a.articles.iter().zip(&b.articles) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.raw_html, y.raw_html);
        }
        let c = generate(&SynthConfig { seed: 1, articles_per_side: 5, ..Default::default() })
            .unwrap();
        assert_ne!(a.articles[0].raw_html, c.articles[0].raw_html);
    }

    #[test]
    fn sentence_lengths_fill_exactly() {
        for total in [30, 60, 90, 120, 150] {
            let lengths = sentence_lengths(total);
            assert_eq!(lengths.iter().sum::<usize>(), total);
            assert!(lengths.iter().all(|&l| l >= 2));
        }
    }
}
