//! News-veracity classification from the word distribution of an article's
//! opening words, plus a linguistic feature analysis suite.
//!
//! The pipeline runs in fixed stages:
//!
//! 1. [`corpus`] — ingest labeled articles, extract body text from saved
//!    HTML, strip boilerplate, split 60/20/20.
//! 2. [`textprep`] — clean, tokenize, Porter-stem, truncate to the first
//!    `X` words (30/60/90/120).
//! 3. [`vocab`] — build List A (stem frequencies) and List B (≤1000
//!    content-word stems), vectorize articles over List B.
//! 4. [`model`] — PCA to 95% retained variance, classifier zoo (linear
//!    SVM, quadratic SVM, bagged trees, naive Bayes, logistic), top-3
//!    selection protocol, evaluation metrics.
//! 5. [`linguistic`] + [`stats`] — POS / sentiment / length / tone
//!    profiles per corpus side and the hypothesis tests comparing them.
//!
//! All stages are deterministic given their inputs and a seed.

pub mod corpus;
pub mod error;
pub mod linguistic;
pub mod model;
pub mod stats;
pub mod synth;
pub mod textprep;
pub mod vocab;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
