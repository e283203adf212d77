//! Dense linear algebra over exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn identity(n: usize) -> RatMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect()
}

pub fn from_integers(m: &[Vec<i64>]) -> RatMatrix {
    m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
}

fn check_square(m: &[Vec<BigRational>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    Ok(n)
}

/// Gauss–Jordan elimination on `[M | rhs]`; returns the transformed `rhs`.
fn eliminate(m: &[Vec<BigRational>], mut rhs: RatMatrix) -> Result<RatMatrix> {
    let n = check_square(m)?;
    let mut a: RatMatrix = m.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for x in rhs[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..n {
                let d = &f * &a[col][c];
                a[r][c] -= d;
            }
            for c in 0..rhs[r].len() {
                let d = &f * &rhs[col][c];
                rhs[r][c] -= d;
            }
        }
    }
    Ok(rhs)
}

/// Solves `M x = b`. Rows are scaled to integers and reduced with
/// fraction-free (Bareiss) elimination, then back-substituted exactly.
pub fn solve(m: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = check_square(m)?;
    if b.len() != n {
        return Err(Error::NotSquare);
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let l = row.iter().chain([rhs]).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().chain([rhs]).map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(a[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(a[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(a[i][i].clone());
    }
    Ok(x)
}

pub fn inverse(m: &[Vec<BigRational>]) -> Result<RatMatrix> {
    eliminate(m, identity(m.len()))
}

pub fn mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> RatMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// `(B + u vᵀ)⁻¹` from `B⁻¹`. Fails with `SingularMatrix` when `1 + vᵀB⁻¹u = 0`,
/// which is exactly when `B + u vᵀ` is singular.
pub fn sherman_morrison(b_inv: &[Vec<BigRational>], u: &[BigRational], v: &[BigRational]) -> Result<RatMatrix> {
    let n = check_square(b_inv)?;
    if u.len() != n || v.len() != n {
        return Err(Error::NotSquare);
    }
    let bu: Vec<BigRational> =
        (0..n).map(|i| (0..n).fold(BigRational::zero(), |acc, k| acc + &b_inv[i][k] * &u[k])).collect();
    let vb: Vec<BigRational> =
        (0..n).map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &v[k] * &b_inv[k][j])).collect();
    let denom = v.iter().zip(&bu).fold(BigRational::one(), |acc, (x, y)| acc + x * y);
    if denom.is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok((0..n)
        .map(|i| (0..n).map(|j| &b_inv[i][j] - &bu[i] * &vb[j] / &denom).collect())
        .collect())
}
