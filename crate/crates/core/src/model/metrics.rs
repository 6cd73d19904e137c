//! Confusion counts and derived evaluation metrics. The fake class is
//! the positive class throughout.

use serde::{Deserialize, Serialize};

use crate::corpus::Label;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub tp: u64,
    pub fp: u64,
    pub fn_: u64,
    pub tn: u64,
    pub accuracy: f64,
    pub precision: f64,
    /// Fake-class true-positive rate.
    pub recall: f64,
    pub f1: f64,
    /// Accuracy on fake articles alone (equals recall).
    pub fake_accuracy: f64,
    /// Accuracy on credible articles alone.
    pub credible_accuracy: f64,
}

impl Metrics {
    pub fn from_confusion(tp: u64, fp: u64, fn_: u64, tn: u64) -> Metrics {
        let n = (tp + fp + fn_ + tn) as f64;
        let ratio = |num: u64, den: u64| if den == 0 { 0.0 } else { num as f64 / den as f64 };
        let precision = ratio(tp, tp + fp);
        let recall = ratio(tp, tp + fn_);
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        Metrics {
            tp,
            fp,
            fn_,
            tn,
            accuracy: if n == 0.0 { 0.0 } else { (tp + tn) as f64 / n },
            precision,
            recall,
            f1,
            fake_accuracy: recall,
            credible_accuracy: ratio(tn, tn + fp),
        }
    }

    pub fn from_predictions(predicted: &[Label], actual: &[Label]) -> Metrics {
        assert_eq!(predicted.len(), actual.len());
        let mut tp = 0;
        let mut fp = 0;
        let mut fn_ = 0;
        let mut tn = 0;
        for (&p, &a) in predicted.iter().zip(actual) {
            match (p, a) {
                (Label::Fake, Label::Fake) => tp += 1,
                (Label::Fake, Label::Credible) => fp += 1,
                (Label::Credible, Label::Fake) => fn_ += 1,
                (Label::Credible, Label::Credible) => tn += 1,
            }
        }
        Metrics::from_confusion(tp, fp, fn_, tn)
    }

    pub fn total(&self) -> u64 {
        self.tp + self.fp + self.fn_ + self.tn
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn all_correct() {
        let m = Metrics::from_confusion(10, 0, 0, 10);
        assert_eq!(m.accuracy, 1.0);
        assert_eq!(m.recall, 1.0);
        assert_eq!(m.f1, 1.0);
    }

    #[test]
    fn hand_computed_confusion() {
        let m = Metrics::from_confusion(8, 2, 1, 9);
        assert_abs_diff_eq!(m.precision, 0.8, epsilon = 1e-12);
        assert_abs_diff_eq!(m.recall, 8.0 / 9.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.f1, 0.8421052631578948, epsilon = 1e-12);
        assert_abs_diff_eq!(m.accuracy, 0.85, epsilon = 1e-12);
        assert_eq!(m.total(), 20);
    }

    #[test]
    fn f1_is_harmonic_mean() {
        for (tp, fp, fn_, tn) in [(8, 2, 1, 9), (5, 5, 5, 5), (1, 0, 9, 10)] {
            let m = Metrics::from_confusion(tp, fp, fn_, tn);
            if m.precision + m.recall > 0.0 {
                let harmonic = 2.0 * m.precision * m.recall / (m.precision + m.recall);
                assert_abs_diff_eq!(m.f1, harmonic, epsilon = 1e-12);
            }
            assert_abs_diff_eq!(
                m.accuracy,
                (m.tp + m.tn) as f64 / m.total() as f64,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn from_predictions_counts() {
        use Label::*;
        let predicted = [Fake, Fake, Credible, Credible];
        let actual = [Fake, Credible, Fake, Credible];
        let m = Metrics::from_predictions(&predicted, &actual);
        assert_eq!((m.tp, m.fp, m.fn_, m.tn), (1, 1, 1, 1));
        assert_eq!(m.accuracy, 0.5);
    }
}
