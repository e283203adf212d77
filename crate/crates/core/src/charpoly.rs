//! Exact characteristic and cofactor polynomials.
//!
//! Every polynomial here is obtained the same way: evaluate an integer
//! determinant at the points `k = 0, 1, ..., d` with fraction-free Bareiss
//! elimination, then interpolate. Interpolation works over the falling
//! factorial basis scaled by `d!`, so all arithmetic stays integral and the
//! final division by `d!` must be exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{CharPoly, IntPoly, RatPoly};

/// Which matrix of a graph a characteristic polynomial refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpectralKind {
    /// `A`
    Adjacency,
    /// `L = D − A`
    Laplacian,
    /// `S = D + A`
    Signless,
    /// `D⁻¹A`; equal random-walk polynomials mean equal normalized-Laplacian spectra.
    RandomWalk,
}

impl SpectralKind {
    pub const ALL: [SpectralKind; 4] = [
        SpectralKind::Adjacency,
        SpectralKind::Laplacian,
        SpectralKind::Signless,
        SpectralKind::RandomWalk,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            SpectralKind::Adjacency => "A",
            SpectralKind::Laplacian => "L",
            SpectralKind::Signless => "S",
            SpectralKind::RandomWalk => "N",
        }
    }
}

impl fmt::Display for SpectralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for SpectralKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "adjacency" => Ok(SpectralKind::Adjacency),
            "l" | "laplacian" => Ok(SpectralKind::Laplacian),
            "s" | "q" | "signless" => Ok(SpectralKind::Signless),
            "n" | "normalized" | "randomwalk" | "random-walk" => Ok(SpectralKind::RandomWalk),
            _ => Err(Error::BadParameter(format!("unknown spectral kind {s:?}"))),
        }
    }
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det_exact(m: &[Vec<BigInt>]) -> Result<BigInt> {
    if m.iter().any(|r| r.len() != m.len()) {
        return Err(Error::NotSquare);
    }
    Ok(bareiss(m.to_vec()))
}

pub(crate) fn det_i64(m: &[Vec<i64>]) -> BigInt {
    bareiss(m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let cell = &mut row[j];
                *cell *= pivot;
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    *cell -= &lead * &pivot_row[j];
                }
                if !prev.is_one() {
                    *cell /= &prev;
                }
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Interpolates the polynomial of degree `< values.len()` taking `values[k]`
/// at `t = k`. Fails if the interpolant has non-integer coefficients.
pub(crate) fn interpolate_integer(values: &[BigInt]) -> Result<IntPoly> {
    let d = match values.len().checked_sub(1) {
        Some(d) => d,
        None => return Ok(IntPoly::zero()),
    };
    // forward differences Δ^j f(0)
    let mut diffs = values.to_vec();
    let mut lead = Vec::with_capacity(d + 1);
    for j in 0..=d {
        lead.push(diffs[0].clone());
        for i in 0..d - j {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    // d! P(t) = Σ_j Δ^j f(0) · (d!/j!) · t(t−1)…(t−j+1)
    let mut factorials = vec![BigInt::one(); d + 1];
    for j in 1..=d {
        factorials[j] = &factorials[j - 1] * BigInt::from(j);
    }
    let d_fact = &factorials[d];
    let mut falling = IntPoly::constant(1);
    let mut acc = vec![BigInt::zero(); d + 1];
    for (j, delta) in lead.iter().enumerate() {
        if !delta.is_zero() {
            let w = delta * (d_fact / &factorials[j]);
            for (i, c) in falling.coeffs().iter().enumerate() {
                acc[i] += &w * c;
            }
        }
        falling = &falling * &IntPoly::linear_root(j as i64);
    }
    let mut coeffs = Vec::with_capacity(d + 1);
    for c in acc {
        let (q, r) = c.div_rem(d_fact);
        if !r.is_zero() {
            return Err(Error::Internal("interpolated polynomial has a non-integer coefficient".into()));
        }
        coeffs.push(q);
    }
    Ok(IntPoly::new(coeffs))
}

/// `det(t·diag(scale) − M)` as a polynomial, for an integer matrix `M`.
fn det_poly(m: &[Vec<i64>], scale: &[i64]) -> Result<IntPoly> {
    let n = m.len();
    let values: Vec<BigInt> = (0..=n as i64)
        .map(|k| {
            let shifted: Vec<Vec<i64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { k * scale[i] - m[i][j] } else { -m[i][j] })
                        .collect()
                })
                .collect();
            det_i64(&shifted)
        })
        .collect();
    interpolate_integer(&values)
}

/// Exact characteristic polynomial `det(tI − M)` of a square integer matrix.
pub fn matrix_charpoly(m: &[Vec<i64>]) -> Result<IntPoly> {
    if m.iter().any(|r| r.len() != m.len()) {
        return Err(Error::NotSquare);
    }
    let p = det_poly(m, &vec![1; m.len()])?;
    if !p.is_monic() && !m.is_empty() {
        return Err(Error::Internal("characteristic polynomial is not monic".into()));
    }
    Ok(p)
}

/// The integer matrix `A`, `L` or `S` of `g`. For `RandomWalk` this is `A`.
pub fn kind_matrix(g: &Graph, kind: SpectralKind) -> Vec<Vec<i64>> {
    let mut m = g.adjacency_matrix();
    let sign = match kind {
        SpectralKind::Adjacency | SpectralKind::RandomWalk => return m,
        SpectralKind::Laplacian => -1,
        SpectralKind::Signless => 1,
    };
    for (u, row) in m.iter_mut().enumerate() {
        let d = g.degree(u) as i64;
        for x in row.iter_mut() {
            *x *= sign;
        }
        row[u] = d;
    }
    m
}

/// Exact characteristic polynomial of the chosen matrix of `g`.
///
/// For `RandomWalk` the result is `det(tD − A) / det(D)`.
pub fn charpoly(g: &Graph, kind: SpectralKind) -> Result<CharPoly> {
    let m = kind_matrix(g, kind);
    match kind {
        SpectralKind::RandomWalk => {
            let degrees = g.degrees();
            if let Some(v) = degrees.iter().position(|&d| d == 0) {
                return Err(Error::IsolatedVertex(v));
            }
            let scale: Vec<i64> = degrees.iter().map(|&d| d as i64).collect();
            let num = det_poly(&m, &scale)?;
            let den: BigInt = scale.iter().map(|&d| BigInt::from(d)).product();
            if num.leading() != Some(&den) && g.order() > 0 {
                return Err(Error::Internal("random-walk polynomial has wrong leading term".into()));
            }
            Ok(CharPoly::Rat(RatPoly::new(num, den)))
        }
        _ => Ok(CharPoly::Int(matrix_charpoly(&m)?)),
    }
}

/// `φ(X, t) = det(tI − A)`.
pub fn adjacency_charpoly(g: &Graph) -> IntPoly {
    matrix_charpoly(&g.adjacency_matrix()).expect("adjacency matrix is square")
}

/// The `(u, v)` entry of `adj(tI − A)`: `(−1)^{u+v}` times the minor of
/// `tI − A` with row `v` and column `u` removed.
pub fn cofactor_poly(g: &Graph, u: usize, v: usize) -> Result<IntPoly> {
    let n = g.order();
    if u >= n {
        return Err(Error::OutOfRange(u));
    }
    if v >= n {
        return Err(Error::OutOfRange(v));
    }
    if u == v {
        return Err(Error::SameVertex);
    }
    let a = g.adjacency_matrix();
    let rows: Vec<usize> = (0..n).filter(|&r| r != v).collect();
    let cols: Vec<usize> = (0..n).filter(|&c| c != u).collect();
    let sign = if (u + v) % 2 == 0 { 1 } else { -1 };
    let values: Vec<BigInt> = (0..n as i64)
        .map(|k| {
            let minor: Vec<Vec<i64>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| if i == j { k - a[i][j] } else { -a[i][j] }).collect())
                .collect();
            det_i64(&minor) * sign
        })
        .collect();
    interpolate_integer(&values)
}

/// `φ(X∖e, t)` for the edge `e = {u, v}`, checked against
/// `φ(X) − φ(X∖{u,v}) + 2 φ_uv(X)`.
pub fn edge_deletion_poly(g: &Graph, u: usize, v: usize) -> Result<IntPoly> {
    if u >= g.order() || v >= g.order() || u == v || !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u.min(v), u.max(v)));
    }
    let mut deleted = g.clone();
    deleted.remove_edge(u, v)?;
    let direct = adjacency_charpoly(&deleted);
    let two = IntPoly::constant(2);
    let via_identity = &(&adjacency_charpoly(g) - &adjacency_charpoly(&g.delete_vertices(&[u, v])?))
        + &(&two * &cofactor_poly(g, u, v)?);
    if direct != via_identity {
        return Err(Error::Internal(format!("edge-deletion identity failed on {{{u}, {v}}}")));
    }
    Ok(direct)
}
