//! Principal-component reduction to a fixed retained-variance level.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A fitted reduction: training mean, `k` orthonormal component rows and
/// their explained-variance ratios. `k` is the smallest count whose
/// cumulative ratio reaches `variance_retained`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PcaModel {
    pub mean: Vec<f64>,
    pub components: Vec<Vec<f64>>,
    pub explained_ratio: Vec<f64>,
    pub variance_retained: f64,
}

impl PcaModel {
    pub fn input_dim(&self) -> usize {
        self.mean.len()
    }

    pub fn output_dim(&self) -> usize {
        self.components.len()
    }
}

/// Center by the column means and eigendecompose the sample covariance,
/// keeping the smallest k with cumulative explained variance ≥
/// `variance_retained`.
pub fn fit_pca(rows: &[Vec<f64>], variance_retained: f64) -> Result<PcaModel> {
    let n = rows.len();
    if n < 2 {
        return Err(Error::InvalidConfig("PCA needs at least 2 rows".into()));
    }
    let d = rows[0].len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: row.len() });
        }
        if let Some(j) = row.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { row: i, col: j });
        }
    }
    if !(0.0 < variance_retained && variance_retained <= 1.0) {
        return Err(Error::InvalidConfig(format!(
            "variance_retained must be in (0, 1], got {variance_retained}"
        )));
    }

    let mut mean = vec![0.0; d];
    for row in rows {
        for (m, v) in mean.iter_mut().zip(row) {
            *m += v;
        }
    }
    for m in mean.iter_mut() {
        *m /= n as f64;
    }

    // centered data matrix, n×d
    let centered = DMatrix::from_fn(n, d, |i, j| rows[i][j] - mean[j]);
    let cov = centered.transpose() * &centered / (n as f64 - 1.0);
    let eigen = SymmetricEigen::new(cov);

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| {
        eigen.eigenvalues[b]
            .partial_cmp(&eigen.eigenvalues[a])
            .unwrap()
            .then(a.cmp(&b))
    });
    let total: f64 = eigen.eigenvalues.iter().map(|&v| v.max(0.0)).sum();
    if total <= 0.0 {
        return Err(Error::ZeroVariance);
    }

    let mut components = Vec::new();
    let mut explained_ratio = Vec::new();
    let mut cumulative = 0.0;
    for &idx in &order {
        let ratio = eigen.eigenvalues[idx].max(0.0) / total;
        components.push(eigen.eigenvectors.column(idx).iter().copied().collect());
        explained_ratio.push(ratio);
        cumulative += ratio;
        if cumulative >= variance_retained {
            break;
        }
    }
    Ok(PcaModel { mean, components, explained_ratio, variance_retained })
}

/// Map rows to component scores using the training mean.
pub fn transform(pca: &PcaModel, rows: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    rows.iter().map(|row| transform_row(pca, row)).collect()
}

pub fn transform_row(pca: &PcaModel, row: &[f64]) -> Result<Vec<f64>> {
    if row.len() != pca.input_dim() {
        return Err(Error::DimensionMismatch {
            expected: pca.input_dim(),
            found: row.len(),
        });
    }
    let centered: Vec<f64> = row.iter().zip(&pca.mean).map(|(v, m)| v - m).collect();
    Ok(pca
        .components
        .iter()
        .map(|c| c.iter().zip(&centered).map(|(a, b)| a * b).sum())
        .collect())
}

/// Reconstruct from component scores back into the original space.
pub fn inverse_transform_row(pca: &PcaModel, scores: &[f64]) -> Result<Vec<f64>> {
    if scores.len() != pca.output_dim() {
        return Err(Error::DimensionMismatch {
            expected: pca.output_dim(),
            found: scores.len(),
        });
    }
    let mut row = pca.mean.clone();
    for (score, component) in scores.iter().zip(&pca.components) {
        for (r, c) in row.iter_mut().zip(component) {
            *r += score * c;
        }
    }
    Ok(row)
}
