//! Floating-point orthogonal witnesses: similarity with matched vectors,
//! Laplacian pairs fixing the all-ones vector, Gram factors, and the
//! incidence transfer `B₂ = QᵀB₁Q₀`.
//!
//! Nothing here decides cospectrality; exact polynomials do that first and
//! the matrices built here only certify structure.

mod gram;
mod jacobi;

use nalgebra::{DMatrix, DVector};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::charpoly::{charpoly, kind_matrix, SpectralKind};
use crate::error::{Error, Result};
use crate::graph::{incidence, Graph, IncidenceMode};

pub use gram::{gram_factor, GramMethod, RANK_TOL};
pub use jacobi::{asymmetry, complete_basis, jacobi_eigen, scale_of};

/// Eigenvalues closer than this (relative to the spectral scale) are merged.
pub const TOL_GROUP: f64 = 1e-6;
pub const TOL_MATCH: f64 = 1e-7;
pub const TOL_SIM: f64 = 1e-8;
/// A projected vector shorter than this times `‖v‖` counts as zero.
pub const TOL_ZERO: f64 = 1e-9;
/// Allowed `‖BᵀB − CᵀC‖` relative to the Gram scale.
pub const TOL_GRAM: f64 = 1e-8;
/// Allowed `‖QᵀQ − I‖` per unit of dimension.
pub const TOL_ORTH: f64 = 1e-9;

/// One group of numerically equal eigenvalues with an orthonormal basis.
#[derive(Clone, Debug)]
pub struct EigenGroup {
    pub value: f64,
    pub basis: DMatrix<f64>,
}

impl EigenGroup {
    pub fn multiplicity(&self) -> usize {
        self.basis.ncols()
    }

    /// Orthogonal projector onto the eigenspace.
    pub fn projector(&self) -> DMatrix<f64> {
        &self.basis * self.basis.transpose()
    }
}

#[derive(Clone, Debug)]
pub struct SpectralDecomp {
    pub groups: Vec<EigenGroup>,
}

impl SpectralDecomp {
    pub fn dim(&self) -> usize {
        self.groups.iter().map(EigenGroup::multiplicity).sum()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.groups.iter().map(EigenGroup::multiplicity).collect()
    }

    /// `Σ θ_r E_r`.
    pub fn reconstruct(&self) -> DMatrix<f64> {
        let n = self.dim();
        self.groups.iter().fold(DMatrix::zeros(n, n), |acc, g| acc + g.projector() * g.value)
    }
}

/// Symmetric eigendecomposition with eigenvalues within `tol_group` of their
/// neighbour merged into one group, in ascending order.
pub fn spectral_decomp(m: &DMatrix<f64>, tol_group: f64) -> Result<SpectralDecomp> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let asym = asymmetry(m);
    if asym > 1e-12 * scale_of(m) {
        return Err(Error::NotSymmetric(asym));
    }
    let (vals, vecs) = jacobi_eigen(m)?;
    let mut groups: Vec<(f64, Vec<usize>)> = Vec::new();
    for (i, &x) in vals.iter().enumerate() {
        match groups.last_mut() {
            Some((_, idx)) if x - vals[*idx.last().unwrap()] <= tol_group => idx.push(i),
            _ => groups.push((x, vec![i])),
        }
    }
    let groups = groups
        .into_iter()
        .map(|(_, idx)| {
            let value = idx.iter().map(|&i| vals[i]).sum::<f64>() / idx.len() as f64;
            let cols: Vec<DVector<f64>> = idx.iter().map(|&i| vecs.column(i).into_owned()).collect();
            let basis = DMatrix::from_columns(&complete_basis(Vec::new(), &DMatrix::from_columns(&cols), cols.len()));
            EigenGroup { value, basis }
        })
        .collect();
    Ok(SpectralDecomp { groups })
}

fn spectral_tolerance(m: &DMatrix<f64>) -> f64 {
    TOL_GROUP * (scale_of(m) * m.nrows().max(1) as f64)
}

/// Decomposition with the default grouping tolerance for `m`.
pub fn decompose(m: &DMatrix<f64>) -> Result<SpectralDecomp> {
    spectral_decomp(m, spectral_tolerance(m))
}

/// Per-group values `(v₁ᵀE_r v₁, v₂ᵀF_r v₂)`.
#[derive(Clone, Debug, Serialize)]
pub struct MatchedVectors {
    pub values: Vec<(f64, f64)>,
    pub holds: bool,
}

/// Requires the two decompositions to have the same grouped spectrum.
pub fn matched_vector_condition(
    d1: &SpectralDecomp,
    d2: &SpectralDecomp,
    v1: &DVector<f64>,
    v2: &DVector<f64>,
) -> Result<MatchedVectors> {
    let scale = d1.groups.iter().chain(&d2.groups).fold(1.0f64, |a, g| a.max(g.value.abs()));
    let same_spectrum = d1.groups.len() == d2.groups.len()
        && d1.groups.iter().zip(&d2.groups).all(|(a, b)| {
            a.multiplicity() == b.multiplicity() && (a.value - b.value).abs() <= TOL_GROUP * scale * d1.dim() as f64
        });
    if !same_spectrum || v1.len() != d1.dim() || v2.len() != d2.dim() {
        return Err(Error::NotCospectral);
    }
    let values: Vec<(f64, f64)> = d1
        .groups
        .iter()
        .zip(&d2.groups)
        .map(|(e, f)| ((e.basis.transpose() * v1).norm_squared(), (f.basis.transpose() * v2).norm_squared()))
        .collect();
    let vscale = v1.norm_squared().max(v2.norm_squared()).max(1.0);
    let holds = values.iter().all(|(a, b)| (a - b).abs() <= TOL_MATCH * vscale);
    Ok(MatchedVectors { values, holds })
}

/// A named residual and the scale it is measured against.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub name: String,
    pub value: f64,
    pub scale: f64,
}

/// An orthogonal matrix with the residuals that certify it.
#[derive(Clone, Debug)]
pub struct OrthoWitness {
    pub q: DMatrix<f64>,
    /// `‖QᵀQ − I‖` as a max-abs-entry norm.
    pub orthogonality: f64,
    pub residuals: Vec<Residual>,
}

impl OrthoWitness {
    pub fn new(q: DMatrix<f64>, residuals: Vec<(&str, f64, f64)>) -> Self {
        let n = q.nrows();
        let orthogonality = (q.transpose() * &q - DMatrix::<f64>::identity(n, n)).amax();
        let residuals = residuals
            .into_iter()
            .map(|(name, value, scale)| Residual { name: name.to_string(), value, scale })
            .collect();
        OrthoWitness { q, orthogonality, residuals }
    }

    pub fn residual(&self, name: &str) -> Option<f64> {
        self.residuals.iter().find(|r| r.name == name).map(|r| r.value)
    }

    /// Largest of the orthogonality defect and the scaled relation residuals.
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|r| r.value / r.scale.max(1.0)).fold(self.orthogonality, f64::max)
    }

    /// Checks `‖QᵀQ − I‖ ≤ TOL_ORTH·n` and every residual `≤ TOL_SIM·scale`.
    pub fn verify(&self) -> Result<()> {
        let n = self.q.nrows().max(1) as f64;
        if self.orthogonality > TOL_ORTH * n {
            return Err(Error::Numerical(format!("orthogonality defect {:e}", self.orthogonality)));
        }
        for r in &self.residuals {
            if r.value > TOL_SIM * r.scale.max(1.0) {
                return Err(Error::Numerical(format!("residual {} = {:e}", r.name, r.value)));
            }
        }
        Ok(())
    }

    fn verified(self) -> Result<Self> {
        self.verify()?;
        Ok(self)
    }
}

/// A float in 17 significant digits, as a JSON number.
fn json_number(x: f64) -> Box<serde_json::value::RawValue> {
    let s = if x.is_finite() { format!("{x:.16e}") } else { "null".to_string() };
    serde_json::value::RawValue::from_string(s).expect("formatted float is valid JSON")
}

impl Serialize for OrthoWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Box<serde_json::value::RawValue>>> =
            self.q.row_iter().map(|r| r.iter().map(|&x| json_number(x)).collect()).collect();
        let mut st = s.serialize_struct("OrthoWitness", 3)?;
        st.serialize_field("q", &rows)?;
        st.serialize_field("orthogonality", &json_number(self.orthogonality))?;
        st.serialize_field("residuals", &self.residuals)?;
        st.end()
    }
}

/// Orthonormal eigenbasis with each group's first vector set to the
/// normalised projection of `seed` when that projection is non-zero.
fn seeded_basis(d: &SpectralDecomp, seed: &DVector<f64>) -> DMatrix<f64> {
    let mut cols = Vec::with_capacity(d.dim());
    let cut = TOL_ZERO * seed.norm().max(1.0);
    for g in &d.groups {
        let proj: DVector<f64> = &g.basis * (g.basis.transpose() * seed);
        let start = if proj.norm() > cut { vec![&proj / proj.norm()] } else { Vec::new() };
        cols.extend(complete_basis(start, &g.basis, g.multiplicity()));
    }
    DMatrix::from_columns(&cols)
}

/// Orthogonal `Q` with `QM₁ = M₂Q` and `Qv₁ = v₂`, constructed by mapping
/// seeded eigenbases onto each other.
pub fn similarity_witness(m1: &DMatrix<f64>, m2: &DMatrix<f64>, v1: &DVector<f64>, v2: &DVector<f64>) -> Result<OrthoWitness> {
    let d1 = decompose(m1)?;
    let d2 = decompose(m2)?;
    if !matched_vector_condition(&d1, &d2, v1, v2)?.holds {
        return Err(Error::ConditionFailed);
    }
    let w1 = seeded_basis(&d1, v1);
    let w2 = seeded_basis(&d2, v2);
    let q = &w2 * w1.transpose();
    let sim = (&q * m1 - m2 * &q).amax();
    let vec = (&q * v1 - v2).amax();
    let scale = scale_of(m1).max(scale_of(m2));
    OrthoWitness::new(q, vec![("QM1-M2Q", sim, scale), ("Qv1-v2", vec, v2.amax())]).verified()
}

pub fn to_dmatrix(m: &[Vec<i64>]) -> DMatrix<f64> {
    let cols = m.first().map_or(0, Vec::len);
    DMatrix::from_fn(m.len(), cols, |r, c| m[r][c] as f64)
}

/// Dense matrix from rows of equal length.
pub fn matrix_from_rows(rows: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::BadParameter("rows have different lengths".into()));
    }
    Ok(DMatrix::from_fn(rows.len(), cols, |r, c| rows[r][c]))
}

pub fn kind_dmatrix(g: &Graph, kind: SpectralKind) -> DMatrix<f64> {
    to_dmatrix(&kind_matrix(g, kind))
}

fn ones(n: usize) -> DVector<f64> {
    DVector::from_element(n, 1.0)
}

/// Orthogonal `Q` with `QᵀL(Y₁)Q = L(Y₂)` and `Q𝟏 = 𝟏`, as `Q₁Q₂ᵀ` where
/// each `Qᵢ` diagonalizes `L(Yᵢ)` with first column `𝟏/√m`.
pub fn laplacian_pair_witness(y1: &Graph, y2: &Graph) -> Result<OrthoWitness> {
    if y1.order() != y2.order()
        || charpoly(y1, SpectralKind::Laplacian)? != charpoly(y2, SpectralKind::Laplacian)?
    {
        return Err(Error::NotCospectral);
    }
    let (l1, l2) = (kind_dmatrix(y1, SpectralKind::Laplacian), kind_dmatrix(y2, SpectralKind::Laplacian));
    let one = ones(y1.order());
    let q1 = seeded_basis(&decompose(&l1)?, &one);
    let q2 = seeded_basis(&decompose(&l2)?, &one);
    let q = &q1 * q2.transpose();
    let conj = (q.transpose() * &l1 * &q - &l2).amax();
    let fix = (&q * &one - &one).amax();
    OrthoWitness::new(q, vec![("QtL1Q-L2", conj, scale_of(&l2)), ("Q1-1", fix, 1.0)]).verified()
}

/// The vertex-side witness `Q` (with `QᵀM(Y₁)Q = M(Y₂)`, `Q𝟏 = 𝟏`) and the
/// edge-side `Q₀` with `QᵀB₁Q₀ = B₂`, for oriented incidence matrices when
/// `kind` is `Laplacian` and unsigned ones when it is `Signless`.
pub fn incidence_transfer_check(y1: &Graph, y2: &Graph, kind: SpectralKind) -> Result<(OrthoWitness, OrthoWitness)> {
    let (q, mode) = match kind {
        SpectralKind::Laplacian => (laplacian_pair_witness(y1, y2)?, IncidenceMode::Oriented),
        SpectralKind::Signless => {
            if y1.order() != y2.order()
                || charpoly(y1, kind)? != charpoly(y2, kind)?
                || charpoly(&y1.complement(), kind)? != charpoly(&y2.complement(), kind)?
            {
                return Err(Error::NotCospectral);
            }
            let (s1, s2) = (kind_dmatrix(y1, kind), kind_dmatrix(y2, kind));
            let one = ones(y1.order());
            let u = similarity_witness(&s1, &s2, &one, &one)?;
            let q = u.q.transpose();
            let conj = (q.transpose() * &s1 * &q - &s2).amax();
            let fix = (&q * &one - &one).amax();
            let w = OrthoWitness::new(q, vec![("QtS1Q-S2", conj, scale_of(&s2)), ("Q1-1", fix, 1.0)]).verified()?;
            (w, IncidenceMode::Unsigned)
        }
        _ => return Err(Error::BadParameter(format!("incidence transfer uses L or S, not {kind}"))),
    };
    let b1 = to_dmatrix(&incidence(y1, mode).to_rows());
    let b2 = to_dmatrix(&incidence(y2, mode).to_rows());
    if b1.shape() != b2.shape() {
        return Err(Error::NotCospectral);
    }
    // Q₀ᵀ (B₁ᵀQ) = B₂ᵀ, and both sides have column Gram matrix M(Y₂)
    let lhs = b1.transpose() * &q.q;
    let f = gram_factor(&lhs, &b2.transpose(), GramMethod::Svd)?;
    let q0 = f.q.transpose();
    let transfer = (q.q.transpose() * &b1 * &q0 - &b2).amax();
    let q0w = OrthoWitness::new(q0, vec![("QtB1Q0-B2", transfer, 1.0)]).verified()?;
    Ok((q, q0w))
}
