//! Deterministic full-batch solver for the two linear margin models:
//! L2-regularized smoothed hinge (linear SVM) and L2-regularized log
//! loss (logistic regression).
//!
//! The objective is 0.5·||w||² + C·Σ loss(y_i·(w·x_i + b)). Descent uses a
//! Barzilai-Borwein step with Armijo backtracking, so the objective is
//! monotone per outer iteration, and stops when the gradient norm falls
//! below the tolerance.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MarginLoss {
    /// Rennie's smooth hinge: 0.5-m for m≤0, 0.5(1-m)² for 0<m<1, 0 for m≥1.
    SmoothedHinge,
    /// ln(1 + exp(-m)).
    Logistic,
}

impl MarginLoss {
    pub fn value(&self, margin: f64) -> f64 {
        match self {
            MarginLoss::SmoothedHinge => {
                if margin >= 1.0 {
                    0.0
                } else if margin <= 0.0 {
                    0.5 - margin
                } else {
                    0.5 * (1.0 - margin) * (1.0 - margin)
                }
            }
            MarginLoss::Logistic => {
                // stable log1p(exp(-m))
                if margin > 0.0 {
                    (-margin).exp().ln_1p()
                } else {
                    -margin + margin.exp().ln_1p()
                }
            }
        }
    }

    /// d loss / d margin.
    pub fn derivative(&self, margin: f64) -> f64 {
        match self {
            MarginLoss::SmoothedHinge => {
                if margin >= 1.0 {
                    0.0
                } else if margin <= 0.0 {
                    -1.0
                } else {
                    margin - 1.0
                }
            }
            MarginLoss::Logistic => {
                // -sigmoid(-m), computed stably
                if margin > 0.0 {
                    let e = (-margin).exp();
                    -e / (1.0 + e)
                } else {
                    -1.0 / (1.0 + margin.exp())
                }
            }
        }
    }
}

/// Fitted weights for a linear margin model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearModel {
    pub weights: Vec<f64>,
    pub bias: f64,
    pub loss: MarginLoss,
    pub cost: f64,
    /// Gradient norm at the accepted solution.
    pub grad_norm: f64,
    pub iterations: usize,
}

impl LinearModel {
    pub fn score(&self, x: &[f64]) -> f64 {
        self.weights.iter().zip(x).map(|(w, v)| w * v).sum::<f64>() + self.bias
    }
}

/// Objective and gradient at (w, b). Exposed for finite-difference checks.
pub fn objective_and_gradient(
    rows: &[Vec<f64>],
    y: &[f64],
    weights: &[f64],
    bias: f64,
    loss: MarginLoss,
    cost: f64,
) -> (f64, Vec<f64>, f64) {
    let mut value = 0.5 * weights.iter().map(|w| w * w).sum::<f64>();
    let mut grad_w: Vec<f64> = weights.to_vec();
    let mut grad_b = 0.0;
    for (row, &yi) in rows.iter().zip(y) {
        let margin = yi * (row.iter().zip(weights).map(|(v, w)| v * w).sum::<f64>() + bias);
        value += cost * loss.value(margin);
        let g = cost * loss.derivative(margin) * yi;
        for (gw, v) in grad_w.iter_mut().zip(row) {
            *gw += g * v;
        }
        grad_b += g;
    }
    (value, grad_w, grad_b)
}

fn norm(gw: &[f64], gb: f64) -> f64 {
    (gw.iter().map(|g| g * g).sum::<f64>() + gb * gb).sqrt()
}

pub struct SolveOptions {
    pub cost: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { cost: 1.0, tolerance: 1e-6, max_iterations: 50_000 }
    }
}

/// Minimize the regularized empirical loss from a zero start.
pub fn solve(rows: &[Vec<f64>], y: &[f64], loss: MarginLoss, opts: &SolveOptions) -> LinearModel {
    let d = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut w = vec![0.0; d];
    let mut b = 0.0;
    let (mut value, mut gw, mut gb) = objective_and_gradient(rows, y, &w, b, loss, opts.cost);
    let mut step = 1.0 / (1.0 + opts.cost * rows.len() as f64);
    let mut prev: Option<(Vec<f64>, f64, Vec<f64>, f64)> = None;
    let mut iterations = 0;

    for _ in 0..opts.max_iterations {
        let gnorm = norm(&gw, gb);
        if gnorm <= opts.tolerance {
            break;
        }
        iterations += 1;

        // Barzilai-Borwein step estimate from the previous iterate
        if let Some((pw, pb, pgw, pgb)) = &prev {
            let mut sy = 0.0;
            let mut ss = 0.0;
            for i in 0..d {
                let s = w[i] - pw[i];
                let yv = gw[i] - pgw[i];
                sy += s * yv;
                ss += s * s;
            }
            let s = b - pb;
            let yv = gb - pgb;
            sy += s * yv;
            ss += s * s;
            if sy > 1e-300 {
                step = (ss / sy).clamp(1e-12, 1e6);
            }
        }
        prev = Some((w.clone(), b, gw.clone(), gb));

        // Armijo backtracking keeps the objective monotone
        let gsq = gw.iter().map(|g| g * g).sum::<f64>() + gb * gb;
        let mut t = step;
        loop {
            let cand_w: Vec<f64> = w.iter().zip(&gw).map(|(wi, gi)| wi - t * gi).collect();
            let cand_b = b - t * gb;
            let (cand_value, cand_gw, cand_gb) =
                objective_and_gradient(rows, y, &cand_w, cand_b, loss, opts.cost);
            if cand_value <= value - 1e-4 * t * gsq {
                w = cand_w;
                b = cand_b;
                value = cand_value;
                gw = cand_gw;
                gb = cand_gb;
                break;
            }
            t *= 0.5;
            if t < 1e-18 {
                // no descent possible at machine precision
                return LinearModel {
                    weights: w,
                    bias: b,
                    loss,
                    cost: opts.cost,
                    grad_norm: norm(&gw, gb),
                    iterations,
                };
            }
        }
    }
    LinearModel {
        weights: w,
        bias: b,
        loss,
        cost: opts.cost,
        grad_norm: norm(&gw, gb),
        iterations,
    }
}
