//! Orthogonal `Q` with `QB = C` whenever `BᵀB = CᵀC`, built two ways.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::jacobi::{complete_basis, jacobi_eigen, scale_of};
use super::{OrthoWitness, TOL_GRAM};
use crate::error::{Error, Result};

/// Relative cut-off below which a singular value counts as zero.
pub const RANK_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GramMethod {
    /// Diagonalize `BᵀB` and map left singular bases onto each other.
    Svd,
    /// Compose Householder reflections that carry columns of `B` onto `C`.
    Reflection,
}

impl std::str::FromStr for GramMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "svd" => Ok(GramMethod::Svd),
            "reflection" | "householder" => Ok(GramMethod::Reflection),
            _ => Err(Error::BadParameter(format!("unknown method {s:?}"))),
        }
    }
}

pub fn gram_factor(b: &DMatrix<f64>, c: &DMatrix<f64>, method: GramMethod) -> Result<OrthoWitness> {
    if b.shape() != c.shape() {
        return Err(Error::BadParameter("B and C must have the same shape".into()));
    }
    let gb = b.transpose() * b;
    let gc = c.transpose() * c;
    let scale = scale_of(&gb);
    let dev = (&gb - &gc).amax();
    if dev > TOL_GRAM * scale {
        return Err(Error::GramMismatch(dev));
    }
    let q = match method {
        GramMethod::Svd => by_svd(b, c, &gb)?,
        GramMethod::Reflection => by_reflections(b, c),
    };
    let relation = (&q * b - c).amax();
    Ok(OrthoWitness::new(q, vec![("QB-C", relation, scale_of(c))]))
}

fn by_svd(b: &DMatrix<f64>, c: &DMatrix<f64>, gb: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let m = b.nrows();
    let (vals, u) = jacobi_eigen(gb)?;
    let s1 = vals.iter().fold(0.0f64, |a, &x| a.max(x)).sqrt();
    let (mut left_b, mut left_c) = (Vec::new(), Vec::new());
    for i in (0..vals.len()).rev() {
        let ui = u.column(i);
        let bu: DVector<f64> = b * ui;
        let norm = bu.norm();
        if norm <= RANK_TOL * s1 || norm == 0.0 {
            continue;
        }
        // both have length sqrt(λ_i) since the Gram matrices agree
        left_b.push(&bu / norm);
        left_c.push((c * ui) / norm);
    }
    let id = DMatrix::<f64>::identity(m, m);
    let v = complete_basis(left_b, &id, m);
    let w = complete_basis(left_c, &id, m);
    if v.len() != m || w.len() != m {
        return Err(Error::Numerical("could not complete an orthonormal basis".into()));
    }
    let v = DMatrix::from_columns(&v);
    let w = DMatrix::from_columns(&w);
    Ok(w * v.transpose())
}

/// Householder `I − 2xxᵀ/xᵀx` applied on the left.
fn reflect(q: &mut DMatrix<f64>, x: &DVector<f64>) {
    let xx = x.dot(x);
    let proj = x.transpose() * &*q;
    *q -= x * proj * (2.0 / xx);
}

fn by_reflections(b: &DMatrix<f64>, c: &DMatrix<f64>) -> DMatrix<f64> {
    let m = b.nrows();
    let s1 = b.column_iter().map(|col| col.norm()).fold(0.0, f64::max);
    // a basis of the column space of B, chosen greedily from the left
    let mut ortho: Vec<DVector<f64>> = Vec::new();
    let mut pivots = Vec::new();
    for j in 0..b.ncols() {
        let mut x = b.column(j).into_owned();
        for _ in 0..2 {
            for o in &ortho {
                let d = o.dot(&x);
                x -= o * d;
            }
        }
        let norm = x.norm();
        if norm > RANK_TOL * s1 && norm > 0.0 {
            ortho.push(x / norm);
            pivots.push(j);
        }
    }
    let mut q = DMatrix::<f64>::identity(m, m);
    for &j in &pivots {
        let bj: DVector<f64> = &q * b.column(j);
        let diff = bj - c.column(j);
        if diff.norm() > RANK_TOL * s1.max(1.0) {
            // the reflection swaps Q b_j and c_j and fixes every earlier c_i
            reflect(&mut q, &diff);
        }
    }
    q
}
