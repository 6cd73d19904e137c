//! CART decision trees (Gini splits) and bootstrap-aggregated ensembles
//! with majority vote.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum TreeNode {
    Leaf {
        /// +1 / -1 majority label; ties go negative (credible).
        label: f64,
    },
    Branch {
        feature: usize,
        threshold: f64,
        left: Box<TreeNode>,
        right: Box<TreeNode>,
    },
}

impl TreeNode {
    pub fn predict(&self, x: &[f64]) -> f64 {
        match self {
            TreeNode::Leaf { label } => *label,
            TreeNode::Branch { feature, threshold, left, right } => {
                if x[*feature] <= *threshold {
                    left.predict(x)
                } else {
                    right.predict(x)
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TreeOptions {
    pub max_depth: usize,
    pub min_leaf: usize,
}

impl Default for TreeOptions {
    fn default() -> Self {
        TreeOptions { max_depth: 10, min_leaf: 2 }
    }
}

fn gini(pos: usize, total: usize) -> f64 {
    if total == 0 {
        return 0.0;
    }
    let p = pos as f64 / total as f64;
    2.0 * p * (1.0 - p)
}

fn majority(indices: &[usize], y: &[f64]) -> f64 {
    let pos = indices.iter().filter(|&&i| y[i] > 0.0).count();
    if 2 * pos > indices.len() {
        1.0
    } else {
        -1.0
    }
}

/// Best (feature, threshold) by weighted child Gini; `None` when no valid
/// split position exists. Zero-gain splits are allowed (an XOR layout has
/// no first split with positive gain). Ties resolve to the lowest feature
/// index and then the lowest threshold, so training is deterministic.
fn best_split(
    rows: &[Vec<f64>],
    y: &[f64],
    indices: &[usize],
    min_leaf: usize,
) -> Option<(usize, f64)> {
    let n = indices.len();
    let total_pos = indices.iter().filter(|&&i| y[i] > 0.0).count();
    let d = rows[indices[0]].len();
    let mut best: Option<(f64, usize, f64)> = None; // (impurity, feature, threshold)
    let mut column: Vec<(f64, bool)> = Vec::with_capacity(n);
    for feature in 0..d {
        column.clear();
        column.extend(indices.iter().map(|&i| (rows[i][feature], y[i] > 0.0)));
        column.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut left_n = 0;
        let mut left_pos = 0;
        for w in 0..n - 1 {
            left_n += 1;
            if column[w].1 {
                left_pos += 1;
            }
            if column[w].0 == column[w + 1].0 {
                continue; // can't split between equal values
            }
            let right_n = n - left_n;
            if left_n < min_leaf || right_n < min_leaf {
                continue;
            }
            let right_pos = total_pos - left_pos;
            let impurity = (left_n as f64 * gini(left_pos, left_n)
                + right_n as f64 * gini(right_pos, right_n))
                / n as f64;
            if best.map_or(true, |(bi, _, _)| impurity < bi - 1e-12) {
                let threshold = 0.5 * (column[w].0 + column[w + 1].0);
                best = Some((impurity, feature, threshold));
            }
        }
    }
    best.map(|(_, f, t)| (f, t))
}

fn grow(
    rows: &[Vec<f64>],
    y: &[f64],
    indices: &[usize],
    depth: usize,
    opts: &TreeOptions,
) -> TreeNode {
    let pos = indices.iter().filter(|&&i| y[i] > 0.0).count();
    if depth >= opts.max_depth || pos == 0 || pos == indices.len() || indices.len() < 2 * opts.min_leaf
    {
        return TreeNode::Leaf { label: majority(indices, y) };
    }
    match best_split(rows, y, indices, opts.min_leaf) {
        None => TreeNode::Leaf { label: majority(indices, y) },
        Some((feature, threshold)) => {
            let (left, right): (Vec<usize>, Vec<usize>) = indices
                .iter()
                .partition(|&&i| rows[i][feature] <= threshold);
            TreeNode::Branch {
                feature,
                threshold,
                left: Box::new(grow(rows, y, &left, depth + 1, opts)),
                right: Box::new(grow(rows, y, &right, depth + 1, opts)),
            }
        }
    }
}

/// Fit a single CART tree on all rows.
pub fn fit_tree(rows: &[Vec<f64>], y: &[f64], opts: &TreeOptions) -> TreeNode {
    let indices: Vec<usize> = (0..rows.len()).collect();
    grow(rows, y, &indices, 0, opts)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaggedTrees {
    pub trees: Vec<TreeNode>,
}

impl BaggedTrees {
    /// Majority vote over the ensemble; the signed vote fraction is the
    /// score. Vote ties go negative.
    pub fn score(&self, x: &[f64]) -> f64 {
        let votes: f64 = self.trees.iter().map(|t| t.predict(x)).sum();
        votes / self.trees.len() as f64
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BaggingOptions {
    pub n_trees: usize,
    pub bootstrap: bool,
    pub tree: TreeOptions,
    pub seed: u64,
}

impl Default for BaggingOptions {
    fn default() -> Self {
        BaggingOptions { n_trees: 50, bootstrap: true, tree: TreeOptions::default(), seed: 0 }
    }
}

/// B bootstrap CART trees (seeded), majority vote. With `bootstrap`
/// off and B = 1 this is exactly the single tree.
pub fn fit_bagged(rows: &[Vec<f64>], y: &[f64], opts: &BaggingOptions) -> BaggedTrees {
    let n = rows.len();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut trees = Vec::with_capacity(opts.n_trees);
    for _ in 0..opts.n_trees {
        let indices: Vec<usize> = if opts.bootstrap {
            (0..n).map(|_| rng.gen_range(0..n)).collect()
        } else {
            (0..n).collect()
        };
        trees.push(grow(rows, y, &indices, 0, &opts.tree));
    }
    BaggedTrees { trees }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stripes() -> (Vec<Vec<f64>>, Vec<f64>) {
        let mut rows = Vec::new();
        let mut y = Vec::new();
        for i in 0..40 {
            let x = i as f64 / 10.0;
            rows.push(vec![x, (i % 7) as f64]);
            y.push(if x < 2.0 { -1.0 } else { 1.0 });
        }
        (rows, y)
    }

    #[test]
    fn single_tree_fits_axis_aligned_data() {
        let (rows, y) = stripes();
        let tree = fit_tree(&rows, &y, &TreeOptions::default());
        for (row, &yi) in rows.iter().zip(&y) {
            assert_eq!(tree.predict(row), yi);
        }
    }

    #[test]
    fn one_tree_no_bootstrap_equals_single_cart() {
        let (rows, y) = stripes();
        let single = fit_tree(&rows, &y, &TreeOptions::default());
        let bagged = fit_bagged(
            &rows,
            &y,
            &BaggingOptions { n_trees: 1, bootstrap: false, ..Default::default() },
        );
        assert_eq!(bagged.trees[0], single);
    }

    #[test]
    fn bagging_is_seed_deterministic() {
        let (rows, y) = stripes();
        let opts = BaggingOptions { n_trees: 10, seed: 5, ..Default::default() };
        let a = fit_bagged(&rows, &y, &opts);
        let b = fit_bagged(&rows, &y, &opts);
        assert_eq!(a, b);
    }

    #[test]
    fn pure_node_is_a_leaf() {
        let rows = vec![vec![0.0], vec![1.0], vec![2.0]];
        let y = vec![1.0, 1.0, 1.0];
        let tree = fit_tree(&rows, &y, &TreeOptions::default());
        assert_eq!(tree, TreeNode::Leaf { label: 1.0 });
    }

    #[test]
    fn xor_needs_depth_two() {
        let rows = vec![
            vec![0.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
        ];
        let y = vec![-1.0, 1.0, 1.0, -1.0];
        let tree = fit_tree(&rows, &y, &TreeOptions { max_depth: 4, min_leaf: 1 });
        for (row, &yi) in rows.iter().zip(&y) {
            assert_eq!(tree.predict(row), yi);
        }
    }
}
