//! Multinomial naive Bayes with add-one (Lidstone) smoothing, trained on
//! raw count vectors.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultinomialNb {
    /// ln P(class) for (negative, positive).
    pub log_priors: [f64; 2],
    /// Per-feature ln P(word | class) for (negative, positive).
    pub log_likelihoods: [Vec<f64>; 2],
}

impl MultinomialNb {
    /// Log-odds of the positive class; > 0 predicts positive.
    pub fn score(&self, x: &[f64]) -> f64 {
        let mut log_odds = self.log_priors[1] - self.log_priors[0];
        for (j, &count) in x.iter().enumerate() {
            log_odds += count * (self.log_likelihoods[1][j] - self.log_likelihoods[0][j]);
        }
        log_odds
    }
}

pub fn fit_multinomial_nb(rows: &[Vec<f64>], y: &[f64], alpha: f64) -> MultinomialNb {
    let d = rows.first().map(|r| r.len()).unwrap_or(0);
    let n = rows.len() as f64;
    let mut class_counts = [0.0f64; 2];
    let mut feature_counts = [vec![0.0f64; d], vec![0.0f64; d]];
    for (row, &yi) in rows.iter().zip(y) {
        let c = usize::from(yi > 0.0);
        class_counts[c] += 1.0;
        for (acc, &v) in feature_counts[c].iter_mut().zip(row) {
            *acc += v;
        }
    }
    let mut log_likelihoods = [vec![0.0; d], vec![0.0; d]];
    for c in 0..2 {
        let total: f64 = feature_counts[c].iter().sum::<f64>() + alpha * d as f64;
        for j in 0..d {
            log_likelihoods[c][j] = ((feature_counts[c][j] + alpha) / total).ln();
        }
    }
    MultinomialNb {
        log_priors: [
            (class_counts[0].max(f64::MIN_POSITIVE) / n).ln(),
            (class_counts[1].max(f64::MIN_POSITIVE) / n).ln(),
        ],
        log_likelihoods,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separable_word_distributions() {
        // positive docs use feature 0, negative docs feature 1
        let rows = vec![
            vec![5.0, 0.0],
            vec![4.0, 1.0],
            vec![0.0, 5.0],
            vec![1.0, 4.0],
        ];
        let y = vec![1.0, 1.0, -1.0, -1.0];
        let nb = fit_multinomial_nb(&rows, &y, 1.0);
        for (row, &yi) in rows.iter().zip(&y) {
            assert!(yi * nb.score(row) > 0.0);
        }
    }

    #[test]
    fn smoothing_keeps_unseen_words_finite() {
        let rows = vec![vec![3.0, 0.0], vec![0.0, 3.0]];
        let y = vec![1.0, -1.0];
        let nb = fit_multinomial_nb(&rows, &y, 1.0);
        let s = nb.score(&[0.0, 0.0]);
        assert!(s.is_finite());
        // symmetric priors and smoothing: empty doc scores zero
        assert!(s.abs() < 1e-12);
    }
}
