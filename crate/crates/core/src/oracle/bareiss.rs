use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MATRIX_TREE_CAP: usize = 400;

/// Number of spanning trees: the determinant of the combinatorial
/// Laplacian with the last row and column removed.
pub fn matrix_tree_count(graph: &Graph, cap: usize) -> Result<BigUint> {
    matrix_tree_count_removing(graph, graph.vertex_count() - 1, cap)
}

/// As [`matrix_tree_count`], deleting row and column `removed` instead.
pub fn matrix_tree_count_removing(graph: &Graph, removed: usize, cap: usize) -> Result<BigUint> {
    let n = graph.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded {
            predicted: BigUint::from(n),
            cap: cap as u64,
        });
    }
    if removed >= n {
        return Err(Error::InvalidParameter(format!(
            "vertex {removed} out of range for {n} vertices"
        )));
    }
    let index = |v: usize| if v < removed { Some(v) } else if v > removed { Some(v - 1) } else { None };
    let m = n - 1;
    let mut a = vec![vec![BigInt::zero(); m]; m];
    for v in 0..n {
        if let Some(i) = index(v) {
            a[i][i] = BigInt::from(graph.degree(v));
        }
    }
    for &(u, v) in graph.edges() {
        if let (Some(i), Some(j)) = (index(u), index(v)) {
            a[i][j] = BigInt::from(-1);
            a[j][i] = BigInt::from(-1);
        }
    }
    let det = bareiss_determinant(a);
    det.to_biguint().ok_or_else(|| {
        Error::Arithmetic(format!("negative Laplacian cofactor {det}"))
    })
}

/// Fraction-free Gaussian elimination; every division is exact.
fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let m = a.len();
    if m == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..m - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..m).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..m {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = if v.is_zero() { v } else { v / &prev };
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[m - 1][m - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(m: usize) -> Graph {
        Graph::from_edges((0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(matrix_tree_count(&complete(2), 400).unwrap(), 1u32.into());
        assert_eq!(matrix_tree_count(&complete(3), 400).unwrap(), 3u32.into());
        assert_eq!(matrix_tree_count(&complete(4), 400).unwrap(), 16u32.into());
        // Cayley: m^(m-2)
        assert_eq!(
            matrix_tree_count(&complete(9), 400).unwrap(),
            BigUint::from(9u32).pow(7)
        );
    }

    #[test]
    fn any_cofactor_works() {
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4)]).unwrap();
        let first = matrix_tree_count_removing(&g, 0, 400).unwrap();
        for r in 1..5 {
            assert_eq!(matrix_tree_count_removing(&g, r, 400).unwrap(), first);
        }
        assert_eq!(first, 8u32.into());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            matrix_tree_count(&complete(5), 4),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn pivoting_handles_zero_diagonal() {
        let a = vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(bareiss_determinant(a), BigInt::from(-1));
    }
}
