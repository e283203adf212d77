//! Walk-regularity, 1-walk-regularity and strong regularity, decided exactly.
//!
//! 1-walk-regularity is checked two independent ways: through the Schur
//! products `A^k ∘ I` and `A^k ∘ A` for `k < n`, and through the vertex- and
//! edge-deleted characteristic polynomials. The two verdicts must agree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::charpoly::{adjacency_charpoly, kind_matrix, SpectralKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{self, RatMatrix};

/// Where a Schur-product condition first breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Witness {
    /// `(A^k)_{uu} ≠ (A^k)_{00}`.
    Vertex { k: usize, u: usize },
    /// `(A^k)_{uv}` differs from its value on the first edge.
    Edge { k: usize, u: usize, v: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkRegularity {
    pub walk_regular: bool,
    pub witness: Option<Witness>,
}

/// Certificate for 1-walk-regularity: `A^k ∘ I = a_k I` and `A^k ∘ A = b_k A`
/// for `k = 1..n−1` (index 0 holds `k = 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneWalkRegularCertificate {
    pub pass: bool,
    #[serde(serialize_with = "big_strings")]
    pub a: Vec<BigInt>,
    #[serde(serialize_with = "big_strings")]
    pub b: Vec<BigInt>,
    pub witness: Option<Witness>,
}

fn big_strings<S: Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub c: usize,
}

/// Runs `f` on `A^1, ..., A^{n−1}` until it returns `Some`.
fn scan_powers<T>(g: &Graph, mut f: impl FnMut(usize, &[Vec<BigInt>]) -> Option<T>) -> Option<T> {
    let n = g.order();
    let mut p: Vec<Vec<BigInt>> =
        g.adjacency_matrix().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    for k in 1..n {
        if let Some(t) = f(k, &p) {
            return Some(t);
        }
        if k + 1 < n {
            // A^{k+1}[i][j] = Σ_{l ~ j} A^k[i][l]
            p = p
                .iter()
                .map(|row| nbrs.iter().map(|nj| nj.iter().map(|&l| &row[l]).sum()).collect())
                .collect();
        }
    }
    None
}

fn diagonal_witness(g: &Graph) -> Option<Witness> {
    scan_powers(g, |k, p| (1..p.len()).find(|&u| p[u][u] != p[0][0]).map(|u| Witness::Vertex { k, u }))
}

/// Schur constants `(a_k, b_k)`, or the first witness against them.
pub fn schur_constants(g: &Graph) -> std::result::Result<(Vec<BigInt>, Vec<BigInt>), Witness> {
    let edges = g.edges();
    let (mut a, mut b) = (Vec::new(), Vec::new());
    let bad = scan_powers(g, |k, p| {
        if let Some(u) = (1..p.len()).find(|&u| p[u][u] != p[0][0]) {
            return Some(Witness::Vertex { k, u });
        }
        a.push(p.first().map_or_else(BigInt::zero, |r| r[0].clone()));
        let first = edges.first().map_or_else(BigInt::zero, |&(u, v)| p[u][v].clone());
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| p[u][v] != first) {
            return Some(Witness::Edge { k, u, v });
        }
        b.push(first);
        None
    });
    match bad {
        Some(w) => Err(w),
        None => Ok((a, b)),
    }
}

fn all_equal<T: PartialEq>(mut it: impl Iterator<Item = T>) -> bool {
    match it.next() {
        None => true,
        Some(first) => it.all(|x| x == first),
    }
}

fn vertex_deleted_polys_equal(g: &Graph) -> Result<bool> {
    let mut polys = Vec::with_capacity(g.order());
    for u in 0..g.order() {
        polys.push(adjacency_charpoly(&g.delete_vertices(&[u])?));
    }
    Ok(all_equal(polys.into_iter()))
}

fn edge_deleted_polys_equal(g: &Graph) -> Result<bool> {
    let mut polys = Vec::new();
    for (u, v) in g.edges() {
        polys.push(adjacency_charpoly(&g.delete_vertices(&[u, v])?));
    }
    Ok(all_equal(polys.into_iter()))
}

/// Walk-regularity from the diagonals of `A^k`, cross-checked against the
/// vertex-deleted characteristic polynomials.
pub fn is_walk_regular(g: &Graph) -> Result<WalkRegularity> {
    let witness = diagonal_witness(g);
    let by_polys = vertex_deleted_polys_equal(g)?;
    if by_polys != witness.is_none() {
        return Err(Error::Internal("walk-regularity verdicts disagree".into()));
    }
    Ok(WalkRegularity { walk_regular: by_polys, witness })
}

pub fn is_one_walk_regular(g: &Graph) -> Result<OneWalkRegularCertificate> {
    let schur = schur_constants(g);
    let by_polys = vertex_deleted_polys_equal(g)? && edge_deleted_polys_equal(g)?;
    if by_polys != schur.is_ok() {
        return Err(Error::Internal("1-walk-regularity verdicts disagree".into()));
    }
    Ok(match schur {
        Ok((a, b)) => OneWalkRegularCertificate { pass: true, a, b, witness: None },
        Err(w) => OneWalkRegularCertificate { pass: false, a: Vec::new(), b: Vec::new(), witness: Some(w) },
    })
}

/// Parameters `(n, k, a, c)` when `g` is a connected, regular, non-complete,
/// non-empty graph with `A² = kI + aA + c(J − I − A)`.
pub fn is_strongly_regular(g: &Graph) -> Option<SrgParams> {
    let n = g.order();
    if n < 3 || g.edge_count() == 0 || g.edge_count() == n * (n - 1) / 2 || !g.is_connected() {
        return None;
    }
    let k = g.degree(0);
    if g.degrees().iter().any(|&d| d != k) {
        return None;
    }
    let (mut a, mut c) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let slot = if g.has_edge(u, v) { &mut a } else { &mut c };
            let common = g.common_neighbors(u, v);
            if *slot.get_or_insert(common) != common {
                return None;
            }
        }
    }
    Some(SrgParams { n, k, a: a?, c: c? })
}

/// Exact entries of `(tI − M + Σ s_i e_{u_i} e_{v_i}ᵀ)⁻¹` where `M` is a matrix
/// of a 1-walk-regular graph and all named vertices lie in one clique.
pub struct ResolventProbe {
    g: Graph,
    m: RatMatrix,
}

/// A signed rank-one update `sign · e_u e_vᵀ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Update {
    pub sign: i64,
    pub u: usize,
    pub v: usize,
}

impl ResolventProbe {
    pub fn new(g: &Graph, kind: SpectralKind) -> Result<Self> {
        if schur_constants(g).is_err() {
            return Err(Error::NotOneWalkRegular);
        }
        let mut m = rational::from_integers(&kind_matrix(g, kind));
        if kind == SpectralKind::RandomWalk {
            for (v, row) in m.iter_mut().enumerate() {
                let d = g.degree(v) as i64;
                if d == 0 {
                    return Err(Error::IsolatedVertex(v));
                }
                for x in row.iter_mut() {
                    *x /= rational::rat(d);
                }
            }
        }
        Ok(ResolventProbe { g: g.clone(), m })
    }

    pub fn probe(&self, updates: &[Update], u: usize, v: usize, t: &BigRational) -> Result<BigRational> {
        let n = self.g.order();
        let mut named: Vec<usize> = updates.iter().flat_map(|x| [x.u, x.v]).chain([u, v]).collect();
        if let Some(&bad) = named.iter().find(|&&x| x >= n) {
            return Err(Error::OutOfRange(bad));
        }
        named.sort_unstable();
        named.dedup();
        for (i, &x) in named.iter().enumerate() {
            if named[i + 1..].iter().any(|&y| !self.g.has_edge(x, y)) {
                return Err(Error::NotAClique);
            }
        }
        let mut mat: RatMatrix = self.m.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        for (i, row) in mat.iter_mut().enumerate() {
            row[i] += t;
        }
        for up in updates {
            mat[up.u][up.v] += rational::rat(up.sign);
        }
        let mut e_v = vec![BigRational::zero(); n];
        e_v[v] = rational::rat(1);
        Ok(rational::solve(&mat, &e_v)?.swap_remove(u))
    }
}

/// One-shot form of [`ResolventProbe::probe`].
pub fn clique_resolvent_probe(
    g: &Graph,
    kind: SpectralKind,
    updates: &[Update],
    u: usize,
    v: usize,
    t: &BigRational,
) -> Result<BigRational> {
    ResolventProbe::new(g, kind)?.probe(updates, u, v, t)
}

/// A sample point beyond the spectral radius of the chosen matrix, so
/// `tI − M` is invertible: `n + 1 + i` for `A`, `2n + 1 + i` for `L`, `S`.
pub fn default_sample(g: &Graph, kind: SpectralKind, i: usize) -> BigRational {
    let n = g.order() as i64;
    let base = match kind {
        SpectralKind::Adjacency | SpectralKind::RandomWalk => n + 1,
        SpectralKind::Laplacian | SpectralKind::Signless => 2 * n + 1,
    };
    rational::rat(base + i as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedGraph};

    #[test]
    fn cycle_walk_regular_path_not() {
        let c5 = named_graph(NamedGraph::Cycle(5)).unwrap();
        assert!(is_walk_regular(&c5).unwrap().walk_regular);
        let p3 = named_graph(NamedGraph::Path(3)).unwrap();
        let r = is_walk_regular(&p3).unwrap();
        assert!(!r.walk_regular);
        assert!(matches!(r.witness, Some(Witness::Vertex { k: 2, .. })));
    }

    #[test]
    fn star_not_one_walk_regular() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let cert = is_one_walk_regular(&star).unwrap();
        assert!(!cert.pass);
        assert!(cert.witness.is_some());
    }

    #[test]
    fn petersen_certificate() {
        let p = named_graph(NamedGraph::Petersen).unwrap();
        let cert = is_one_walk_regular(&p).unwrap();
        assert!(cert.pass);
        assert_eq!(cert.a[..3], [0.into(), 3.into(), 0.into()]);
        assert_eq!(cert.b[..3], [1.into(), 0.into(), 5.into()]);
        assert_eq!(is_strongly_regular(&p), Some(SrgParams { n: 10, k: 3, a: 0, c: 1 }));
    }

    #[test]
    fn c6_is_not_srg() {
        assert_eq!(is_strongly_regular(&named_graph(NamedGraph::Cycle(6)).unwrap()), None);
    }

    #[test]
    fn probe_rejects_non_clique() {
        let p = named_graph(NamedGraph::Petersen).unwrap();
        let probe = ResolventProbe::new(&p, SpectralKind::Adjacency).unwrap();
        let far = (1..10).find(|&v| !p.has_edge(0, v)).unwrap();
        let t = default_sample(&p, SpectralKind::Adjacency, 0);
        assert_eq!(probe.probe(&[], 0, far, &t), Err(Error::NotAClique));
    }
}
