//! Kernel SVM in the dual, solved by cyclic coordinate descent on the
//! box-constrained L1-loss dual (no equality constraint: the kernel's
//! constant term absorbs the bias). Used for the degree-2 polynomial
//! family.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolyKernel {
    pub gamma: f64,
    pub coef0: f64,
    pub degree: u32,
}

impl PolyKernel {
    pub fn eval(&self, a: &[f64], b: &[f64]) -> f64 {
        let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        (self.gamma * dot + self.coef0).powi(self.degree as i32)
    }
}

/// Support vectors with their signed dual coefficients α_i·y_i.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelModel {
    pub kernel: PolyKernel,
    pub support_vectors: Vec<Vec<f64>>,
    pub coefficients: Vec<f64>,
}

impl KernelModel {
    pub fn score(&self, x: &[f64]) -> f64 {
        self.support_vectors
            .iter()
            .zip(&self.coefficients)
            .map(|(sv, c)| c * self.kernel.eval(sv, x))
            .sum()
    }
}

pub struct DualOptions {
    pub cost: f64,
    pub tolerance: f64,
    pub max_passes: usize,
}

impl Default for DualOptions {
    fn default() -> Self {
        DualOptions { cost: 1.0, tolerance: 1e-6, max_passes: 1000 }
    }
}

/// Fit by cyclic coordinate maximization of the dual:
/// α_i ← clip(α_i − (y_i f(x_i) − 1) / K_ii, 0, C).
pub fn solve_dual(
    rows: &[Vec<f64>],
    y: &[f64],
    kernel: PolyKernel,
    opts: &DualOptions,
) -> KernelModel {
    let n = rows.len();
    // precomputed kernel matrix; training sets here are desk-scale
    let mut k = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = kernel.eval(&rows[i], &rows[j]);
            k[i][j] = v;
            k[j][i] = v;
        }
    }
    let mut alpha = vec![0.0f64; n];
    // f[i] = Σ_j α_j y_j K_ij, maintained incrementally
    let mut f = vec![0.0f64; n];
    for _ in 0..opts.max_passes {
        let mut max_delta: f64 = 0.0;
        for i in 0..n {
            let kii = k[i][i];
            if kii <= 0.0 {
                continue;
            }
            let grad = y[i] * f[i] - 1.0;
            let new_alpha = (alpha[i] - grad / kii).clamp(0.0, opts.cost);
            let delta = new_alpha - alpha[i];
            if delta != 0.0 {
                alpha[i] = new_alpha;
                for j in 0..n {
                    f[j] += delta * y[i] * k[i][j];
                }
                max_delta = max_delta.max(delta.abs());
            }
        }
        if max_delta < opts.tolerance {
            break;
        }
    }
    let mut support_vectors = Vec::new();
    let mut coefficients = Vec::new();
    for i in 0..n {
        if alpha[i] > 0.0 {
            support_vectors.push(rows[i].clone());
            coefficients.push(alpha[i] * y[i]);
        }
    }
    KernelModel { kernel, support_vectors, coefficients }
}
