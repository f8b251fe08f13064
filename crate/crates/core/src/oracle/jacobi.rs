use super::DenseSymMatrix;
use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-14;
const OFF_DIAGONAL_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
/// rotations until the off-diagonal Frobenius norm drops to 1e-13.
pub fn eig_sym(m: &DenseSymMatrix) -> Result<Vec<f64>> {
    let n = m.order();
    for i in 0..n {
        for j in i + 1..n {
            if (m.get(i, j) - m.get(j, i)).abs() > SYMMETRY_TOL {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    let mut a = m.entries().to_vec();

    let mut sweeps = 0;
    while off_diagonal_norm(&a, n) > OFF_DIAGONAL_TOL {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Arithmetic(format!(
                "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
            )));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * sum).sqrt()
}

/// Zeroes `a[p][q]` (p < q) with a plane rotation applied on both sides.
/// Rows p and q are updated in place, then mirrored into columns p and q.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq.abs() < 1e-300 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let (head, tail) = a.split_at_mut(q * n);
    let row_p = &mut head[p * n..(p + 1) * n];
    let row_q = &mut tail[..n];
    for (x, y) in row_p.iter_mut().zip(row_q.iter_mut()) {
        let (xp, xq) = (*x, *y);
        *x = c * xp - s * xq;
        *y = s * xp + c * xq;
    }
    for r in 0..n {
        a[r * n + p] = a[p * n + r];
        a[r * n + q] = a[q * n + r];
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}
