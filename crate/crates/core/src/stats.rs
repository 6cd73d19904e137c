//! Hypothesis tests over corpus-side feature aggregates: two-proportion and
//! two-sample z-tests, chi-square independence, and the distribution tails
//! they need.
//!
//! Tail probabilities go through the regularized incomplete gamma function
//! (series expansion for `x < a + 1`, Lentz continued fraction otherwise),
//! so the normal and chi-square tails share one code path:
//! `normal_sf(z) = Q(1/2, z^2/2) / 2` and `chi_square_sf(x, df) = Q(df/2, x/2)`.

use serde::{Deserialize, Serialize};

use crate::vocab::{Vocabulary, WordCounts};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TestKind {
    TwoPropZ,
    TwoSampleZ,
    ChiSquare,
}

/// Outcome of a single hypothesis test. `p_value` is always two-tailed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TestResult {
    pub kind: TestKind,
    pub statistic: f64,
    pub df: Option<u64>,
    pub p_value: f64,
    /// Echo of the inputs the statistic was computed from.
    pub inputs: String,
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

const GAMMA_EPS: f64 = 1e-16;
const GAMMA_MAX_ITER: usize = 100_000;

fn gamma_p_series(a: f64, x: f64) -> f64 {
    let mut term = 1.0 / a;
    let mut sum = term;
    let mut n = 1.0;
    for _ in 0..GAMMA_MAX_ITER {
        term *= x / (a + n);
        sum += term;
        if term.abs() < sum.abs() * GAMMA_EPS {
            break;
        }
        n += 1.0;
    }
    sum * (a * x.ln() - x - ln_gamma(a)).exp()
}

fn gamma_q_continued_fraction(a: f64, x: f64) -> f64 {
    // modified Lentz
    let tiny = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..GAMMA_MAX_ITER {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < GAMMA_EPS {
            break;
        }
    }
    h * (a * x.ln() - x - ln_gamma(a)).exp()
}

/// Regularized upper incomplete gamma Q(a, x) = Γ(a, x) / Γ(a).
pub fn gamma_q(a: f64, x: f64) -> f64 {
    assert!(a > 0.0 && x >= 0.0, "gamma_q domain: a > 0, x >= 0");
    if x == 0.0 {
        return 1.0;
    }
    if x < a + 1.0 {
        1.0 - gamma_p_series(a, x)
    } else {
        gamma_q_continued_fraction(a, x)
    }
}

/// Upper-tail standard normal probability P(Z > z).
pub fn normal_sf(z: f64) -> f64 {
    assert!(z.is_finite(), "normal_sf requires finite z");
    if z == 0.0 {
        return 0.5;
    }
    let half_tail = 0.5 * gamma_q(0.5, 0.5 * z * z);
    if z > 0.0 {
        half_tail
    } else {
        1.0 - half_tail
    }
}

/// Two-tailed normal p-value, P(|Z| > |z|). Exactly even in z.
pub fn two_tailed_p(z: f64) -> f64 {
    assert!(z.is_finite(), "two_tailed_p requires finite z");
    gamma_q(0.5, 0.5 * z * z)
}

/// Upper-tail chi-square probability with `df` degrees of freedom.
pub fn chi_square_sf(x: f64, df: u64) -> f64 {
    assert!(x >= 0.0 && df >= 1, "chi_square_sf domain: x >= 0, df >= 1");
    gamma_q(df as f64 / 2.0, x / 2.0)
}

/// Pooled two-proportion z-test on event counts `c1/n1` vs `c2/n2`.
pub fn two_proportion_z(c1: u64, n1: u64, c2: u64, n2: u64) -> Result<TestResult> {
    if n1 == 0 || n2 == 0 || c1 > n1 || c2 > n2 {
        return Err(Error::DegenerateTest(format!(
            "invalid counts ({c1}/{n1}, {c2}/{n2})"
        )));
    }
    let pooled = (c1 + c2) as f64 / (n1 + n2) as f64;
    if pooled == 0.0 || pooled == 1.0 {
        return Err(Error::DegenerateTest(format!(
            "pooled proportion is {pooled}"
        )));
    }
    let p1 = c1 as f64 / n1 as f64;
    let p2 = c2 as f64 / n2 as f64;
    let se = (pooled * (1.0 - pooled) * (1.0 / n1 as f64 + 1.0 / n2 as f64)).sqrt();
    let z = (p1 - p2) / se;
    Ok(TestResult {
        kind: TestKind::TwoPropZ,
        statistic: z,
        df: None,
        p_value: two_tailed_p(z),
        inputs: format!("{c1}/{n1} vs {c2}/{n2}"),
    })
}

/// Two-sample z-test on summary statistics (unpooled standard error).
pub fn two_sample_z(
    mean1: f64,
    sd1: f64,
    n1: u64,
    mean2: f64,
    sd2: f64,
    n2: u64,
) -> Result<TestResult> {
    if sd1 < 0.0 || sd2 < 0.0 || n1 < 2 || n2 < 2 {
        return Err(Error::DegenerateTest(format!(
            "invalid summary (sd1={sd1}, sd2={sd2}, n1={n1}, n2={n2})"
        )));
    }
    let var = sd1 * sd1 / n1 as f64 + sd2 * sd2 / n2 as f64;
    if var == 0.0 {
        return Err(Error::DegenerateTest("zero pooled variance".into()));
    }
    let z = (mean1 - mean2) / var.sqrt();
    Ok(TestResult {
        kind: TestKind::TwoSampleZ,
        statistic: z,
        df: None,
        p_value: two_tailed_p(z),
        inputs: format!("({mean1}, {sd1}, {n1}) vs ({mean2}, {sd2}, {n2})"),
    })
}

/// An r×c table of nonnegative counts with strictly positive margins.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContingencyTable {
    rows: Vec<Vec<u64>>,
}

impl ContingencyTable {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::ZeroMargin);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DegenerateTest("ragged contingency table".into()));
        }
        let t = ContingencyTable { rows };
        if t.row_sums().iter().any(|&s| s == 0) || t.col_sums().iter().any(|&s| s == 0) {
            return Err(Error::ZeroMargin);
        }
        Ok(t)
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        let cols = self.rows[0].len();
        (0..cols).map(|j| self.rows.iter().map(|r| r[j]).sum()).collect()
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

/// Pearson chi-square test of independence, df = (r-1)(c-1).
pub fn chi_square_independence(table: &ContingencyTable) -> Result<TestResult> {
    let row_sums = table.row_sums();
    let col_sums = table.col_sums();
    let total = table.total() as f64;
    let mut statistic = 0.0;
    for (i, row) in table.counts().iter().enumerate() {
        for (j, &observed) in row.iter().enumerate() {
            let expected = row_sums[i] as f64 * col_sums[j] as f64 / total;
            let diff = observed as f64 - expected;
            statistic += diff * diff / expected;
        }
    }
    let df = (row_sums.len() as u64 - 1) * (col_sums.len() as u64 - 1);
    if df == 0 {
        return Err(Error::DegenerateTest("1xN table has no df".into()));
    }
    Ok(TestResult {
        kind: TestKind::ChiSquare,
        statistic,
        df: Some(df),
        p_value: chi_square_sf(statistic, df),
        inputs: format!("{}x{} table, n={}", row_sums.len(), col_sums.len(), total as u64),
    })
}

/// Per-word two-proportion z between two corpus sides, ranked by |z|
/// descending (ties lexicographic). Returns the top `k` words.
pub fn influential_words(
    vocab: &Vocabulary,
    side1: &WordCounts,
    side2: &WordCounts,
    k: usize,
) -> Vec<(String, f64)> {
    let n1: u64 = side1.total();
    let n2: u64 = side2.total();
    let mut scored: Vec<(String, f64)> = vocab
        .stems()
        .iter()
        .map(|stem| {
            let c1 = side1.get(stem);
            let c2 = side2.get(stem);
            let z = match two_proportion_z(c1, n1, c2, n2) {
                Ok(r) => r.statistic,
                Err(_) => 0.0, // word absent on both sides
            };
            (stem.clone(), z)
        })
        .collect();
    scored.sort_by(|a, b| {
        b.1.abs()
            .partial_cmp(&a.1.abs())
            .unwrap()
            .then_with(|| a.0.cmp(&b.0))
    });
    scored.truncate(k);
    scored
}
