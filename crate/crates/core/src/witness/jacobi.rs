use nalgebra::DMatrix;

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Largest absolute entry, or 1 for the zero matrix.
pub fn scale_of(m: &DMatrix<f64>) -> f64 {
    let s = m.amax();
    if s > 0.0 {
        s
    } else {
        1.0
    }
}

/// Largest `|m_ij − m_ji|`.
pub fn asymmetry(m: &DMatrix<f64>) -> f64 {
    (m - m.transpose()).amax()
}

fn off_diagonal(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Returns
/// eigenvalues in ascending order and the matching orthonormal eigenvectors
/// as columns.
pub fn jacobi_eigen(m: &DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::NotSquare);
    }
    let mut a = m.clone();
    let mut v = DMatrix::<f64>::identity(n, n);
    let target = 1e-12 * m.norm().max(1.0);
    let mut sweeps = 0;
    while off_diagonal(&a) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numerical("Jacobi iteration did not converge".into()));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok((values, vectors))
}

/// Extends the orthonormal columns of `start` to an orthonormal basis of the
/// span of `start` and `candidates`, stopping at `dim` columns. Candidates
/// are taken in order, with two rounds of Gram–Schmidt each.
pub fn complete_basis(start: Vec<nalgebra::DVector<f64>>, candidates: &DMatrix<f64>, dim: usize) -> Vec<nalgebra::DVector<f64>> {
    let mut basis = start;
    for j in 0..candidates.ncols() {
        if basis.len() >= dim {
            break;
        }
        let mut x = candidates.column(j).into_owned();
        for _ in 0..2 {
            for b in &basis {
                let d = b.dot(&x);
                x -= b * d;
            }
        }
        let norm = x.norm();
        if norm > 1e-8 {
            basis.push(x / norm);
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let m = DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        let (vals, vecs) = jacobi_eigen(&m).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-12 && (vals[1] - 3.0).abs() < 1e-12);
        let recon = &vecs * DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vals)) * vecs.transpose();
        assert!((recon - m).amax() < 1e-12);
    }

    #[test]
    fn diagonal_input_untouched() {
        let m = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![3.0, -1.0, 2.0]));
        let (vals, _) = jacobi_eigen(&m).unwrap();
        assert_eq!(vals, vec![-1.0, 2.0, 3.0]);
    }
}
