//! Brute-force ground truth, deliberately independent of the series, root
//! and spectrum-transfer code: it only consumes [`Graph`].

mod bareiss;
mod jacobi;

pub use bareiss::{matrix_tree_count, matrix_tree_count_removing, DEFAULT_MATRIX_TREE_CAP};
pub use jacobi::eig_sym;

use crate::graph::Graph;

/// Dense symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseSymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl DenseSymMatrix {
    /// Panics if `entries.len() != order * order`. Symmetry is checked by
    /// [`eig_sym`], not here.
    pub fn from_row_major(order: usize, entries: Vec<f64>) -> Self {
        assert_eq!(entries.len(), order * order);
        Self { order, entries }
    }

    pub fn identity(order: usize) -> Self {
        let mut entries = vec![0.0; order * order];
        for i in 0..order {
            entries[i * order + i] = 1.0;
        }
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.order + col]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.order);
        self.entries
            .chunks_exact(self.order)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// `L = I - D^{-1/2} A D^{-1/2}`: unit diagonal, `-1/sqrt(d_i d_j)` on edges.
pub fn normalized_laplacian(graph: &Graph) -> DenseSymMatrix {
    let n = graph.vertex_count();
    let degrees = graph.degrees();
    let mut m = DenseSymMatrix::identity(n);
    for &(i, j) in graph.edges() {
        let w = -1.0 / ((degrees[i] * degrees[j]) as f64).sqrt();
        m.entries[i * n + j] = w;
        m.entries[j * n + i] = w;
    }
    m
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub max_abs_deviation: f64,
    pub matched: bool,
    pub size_a: usize,
    pub size_b: usize,
    pub tolerance: f64,
}

/// Elementwise comparison after sorting both sides ascending. Mismatched
/// lengths never match and report an infinite deviation.
pub fn compare_spectra(a: &[f64], b: &[f64], tol: f64) -> ComparisonReport {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let max_abs_deviation = if a.len() == b.len() {
        a.iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    ComparisonReport {
        max_abs_deviation,
        matched: a.len() == b.len() && max_abs_deviation <= tol,
        size_a: a.len(),
        size_b: b.len(),
        tolerance: tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laplacian_entries() {
        let k2 = Graph::from_edges([(0, 1)]).unwrap();
        assert_eq!(normalized_laplacian(&k2).entries(), &[1.0, -1.0, -1.0, 1.0]);

        let k3 = Graph::from_edges([(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = normalized_laplacian(&k3);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { -0.5 };
                assert_eq!(m.get(i, j), want);
            }
        }

        let star = Graph::from_edges([(0, 1), (0, 2), (0, 3)]).unwrap();
        let m = normalized_laplacian(&star);
        assert!((m.get(0, 2) + 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(m.get(1, 2), 0.0);
    }

    #[test]
    fn comparisons() {
        let r = compare_spectra(&[0.0, 2.0], &[2.0, 0.0], 1e-8);
        assert!(r.matched);
        assert_eq!(r.max_abs_deviation, 0.0);
        let r = compare_spectra(&[0.0, 1.0], &[0.0, 1.0, 2.0], 1.0);
        assert!(!r.matched);
        assert_eq!((r.size_a, r.size_b), (2, 3));
        let r = compare_spectra(&[0.0, 1.0], &[0.0, 1.1], 0.05);
        assert!(!r.matched);
        assert!((r.max_abs_deviation - 0.1).abs() < 1e-12);
    }
}
