//! Property suites shared by the module tests and the acceptance run.
//! Each returns a one-line summary on success and a description on failure.

use std::collections::HashMap;

use cospec::charpoly::{adjacency_charpoly, cofactor_poly, det_exact, edge_deletion_poly, SpectralKind};
use cospec::family::all_graph_classes;
use cospec::fixtures;
use cospec::graph::{cliques_of_size, named_graph, Graph, NamedGraph};
use cospec::iso::{are_isomorphic, canonical_cert, is_isomorphism};
use cospec::poly::IntPoly;
use cospec::rational::{self, inverse, sherman_morrison};
use cospec::walk::{default_sample, is_one_walk_regular, ResolventProbe, Update};
use cospec::witness::{gram_factor, GramMethod};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use super::{random_graph, random_perm, rng};

pub type Outcome = Result<String, String>;

pub fn cofactor_identity(trials: usize) -> Outcome {
    let mut r = rng(11);
    let mut pairs = 0;
    for i in 0..trials {
        let n = 2 + i % 6;
        let g = random_graph(&mut r, n, 0.5);
        let phi = adjacency_charpoly(&g);
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let c = cofactor_poly(&g, u, v).map_err(|e| e.to_string())?;
                let du = adjacency_charpoly(&g.delete_vertices(&[u]).unwrap());
                let dv = adjacency_charpoly(&g.delete_vertices(&[v]).unwrap());
                let duv = adjacency_charpoly(&g.delete_vertices(&[u, v]).unwrap());
                if &c * &c != &(&du * &dv) - &(&phi * &duv) {
                    return Err(format!("cofactor identity fails on {g:?} at ({u},{v})"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{trials} graphs, {pairs} ordered pairs"))
}

pub fn edge_deletion_identity(trials: usize) -> Outcome {
    let mut r = rng(12);
    let mut edges = 0;
    for i in 0..trials {
        let g = random_graph(&mut r, 2 + i % 6, 0.5);
        for (u, v) in g.edges() {
            // edge_deletion_poly checks the identity itself and errors on mismatch
            let p = edge_deletion_poly(&g, u, v).map_err(|e| e.to_string())?;
            let mut h = g.clone();
            h.remove_edge(u, v).unwrap();
            if p != adjacency_charpoly(&h) {
                return Err(format!("edge deletion polynomial wrong on {g:?}"));
            }
            edges += 1;
        }
    }
    Ok(format!("{trials} graphs, {edges} edges"))
}

pub fn walk_conditions_agree(trials: usize) -> Outcome {
    let mut r = rng(13);
    let mut graphs: Vec<Graph> = (0..trials)
        .map(|i| {
            let n = 1 + i % 8;
            let p = [0.2, 0.5, 0.8][i % 3];
            random_graph(&mut r, n, p)
        })
        .collect();
    graphs.push(named_graph(NamedGraph::Petersen).unwrap());
    graphs.push(named_graph(NamedGraph::Cycle(6)).unwrap());
    graphs.push(named_graph(NamedGraph::Triangular(5)).unwrap());
    graphs.push(fixtures::latin5());
    let mut passes = 0;
    for g in &graphs {
        // is_one_walk_regular errors if the Schur-product and polynomial verdicts disagree
        let cert = is_one_walk_regular(g).map_err(|e| format!("{e} on {g:?}"))?;
        passes += cert.pass as usize;
    }
    Ok(format!("{} graphs agree, {passes} 1-walk-regular", graphs.len()))
}

fn random_int_matrix(r: &mut impl Rng, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| r.gen_range(-4..=4)).collect()).collect()
}

fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn det_swap(trials: usize) -> Outcome {
    let mut r = rng(14);
    for _ in 0..trials {
        let (m, n) = (r.gen_range(1..=7), r.gen_range(1..=7));
        let c = random_int_matrix(&mut r, m, n);
        let d = random_int_matrix(&mut r, n, m);
        let i_minus = |x: &[Vec<i64>], y: &[Vec<i64>]| -> Vec<Vec<i64>> {
            let k = x.len();
            (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| (i == j) as i64 - (0..y.len()).map(|l| x[i][l] * y[l][j]).sum::<i64>())
                        .collect()
                })
                .collect()
        };
        let lhs = det_exact(&big(&i_minus(&c, &d))).map_err(|e| e.to_string())?;
        let rhs = det_exact(&big(&i_minus(&d, &c))).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("det(I-CD) = {lhs} but det(I-DC) = {rhs}"));
        }
    }
    Ok(format!("{trials} instances"))
}

fn random_rational(r: &mut impl Rng) -> BigRational {
    BigRational::new(r.gen_range(-9..=9).into(), r.gen_range(1..=5).into())
}

pub fn sherman_morrison_exact(trials: usize) -> Outcome {
    let mut r = rng(15);
    let mut done = 0;
    let mut singular_seen = 0;
    while done < trials {
        let b: Vec<Vec<BigRational>> = (0..5).map(|_| (0..5).map(|_| random_rational(&mut r)).collect()).collect();
        let Ok(b_inv) = inverse(&b) else { continue };
        let u: Vec<BigRational> = (0..5).map(|_| rational::rat(r.gen_range(-3..=3))).collect();
        let v: Vec<BigRational> = (0..5).map(|_| rational::rat(r.gen_range(-3..=3))).collect();
        let mut updated = b.clone();
        for i in 0..5 {
            for j in 0..5 {
                updated[i][j] += &u[i] * &v[j];
            }
        }
        match (sherman_morrison(&b_inv, &u, &v), inverse(&updated)) {
            (Ok(x), Ok(y)) if x == y => done += 1,
            (Err(_), Err(_)) => singular_seen += 1,
            _ => return Err("Sherman-Morrison disagrees with direct inversion".into()),
        }
    }
    Ok(format!("{trials} instances ({singular_seen} singular updates agreed)"))
}

/// A fixed update pattern on abstract clique positions `0..m`, evaluated on
/// many cliques and vertex orders; every evaluation must agree exactly.
fn resolvent_invariance_on(g: &Graph, name: &str, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    let omega = (1..=g.order()).rev().find(|&m| !cliques_of_size(g, m).is_empty()).unwrap();
    let mut checks = 0;
    for kind in [SpectralKind::Adjacency, SpectralKind::Laplacian] {
        let probe = ResolventProbe::new(g, kind).map_err(|e| e.to_string())?;
        for count in 0..=3usize {
            let m = omega;
            let cliques = cliques_of_size(g, m);
            let pattern: Vec<(i64, usize, usize)> = (0..count)
                .map(|_| (if r.gen_bool(0.5) { 1 } else { -1 }, r.gen_range(0..m), r.gen_range(0..m)))
                .collect();
            let mut targets = vec![(0, 0), (0, 1), (1, 0), (m - 1, m - 1), (m - 1, 0)];
            targets.sort_unstable();
            targets.dedup();
            for t_index in 0..2 {
                let t = default_sample(g, kind, t_index);
                let mut reference: Option<Vec<BigRational>> = None;
                for _ in 0..20 {
                    let clique = cliques.choose(&mut r).unwrap();
                    let order = random_perm(&mut r, m);
                    let at = |i: usize| clique[order[i]];
                    let updates: Vec<Update> =
                        pattern.iter().map(|&(sign, a, b)| Update { sign, u: at(a), v: at(b) }).collect();
                    let values = targets
                        .iter()
                        .map(|&(p, q)| probe.probe(&updates, at(p), at(q), &t))
                        .collect::<cospec::Result<Vec<_>>>()
                        .map_err(|e| e.to_string())?;
                    match &reference {
                        None => reference = Some(values),
                        Some(v) if *v == values => {}
                        Some(_) => {
                            return Err(format!("{name}: probe depends on the clique ({kind}, {count} updates)"))
                        }
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(checks)
}

pub fn resolvent_invariance() -> Outcome {
    let a = resolvent_invariance_on(&named_graph(NamedGraph::Petersen).unwrap(), "petersen", 16)?;
    let b = resolvent_invariance_on(&fixtures::latin5(), "latin5", 17)?;
    Ok(format!("{} clique placements agree", a + b))
}

/// Brute-force isomorphism by trying every permutation.
fn brute_isomorphic(g: &Graph, h: &Graph, perms: &[Vec<usize>]) -> bool {
    g.edge_count() == h.edge_count() && perms.iter().any(|p| g.permute(p) == *h)
}

pub fn six_vertex_completeness() -> Outcome {
    let classes = all_graph_classes(6).map_err(|e| e.to_string())?;
    if classes.len() != 156 {
        return Err(format!("expected 156 classes on 6 vertices, found {}", classes.len()));
    }
    let perms = super::all_perms(6);
    // relabel each class so certificates are not trivially equal by construction
    let mut r = rng(18);
    let relabeled: Vec<Graph> = classes.iter().map(|g| g.permute(&random_perm(&mut r, 6))).collect();
    let certs: Vec<_> = relabeled.iter().map(canonical_cert).collect();
    let mut pairs = 0;
    for i in 0..relabeled.len() {
        for j in i..relabeled.len() {
            let by_cert = certs[i] == certs[j];
            if by_cert != brute_isomorphic(&relabeled[i], &relabeled[j], &perms) {
                return Err(format!("certificate verdict wrong for classes {i}, {j}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("156 classes, {pairs} pairs checked"))
}

pub fn permutation_invariance(trials: usize) -> Outcome {
    let mut r = rng(19);
    let x1 = fixtures::x1();
    let x1_edges = x1.edges();
    for i in 0..trials {
        let g = match i % 4 {
            0 => {
                let mut h = x1.clone();
                let (u, v) = *x1_edges.choose(&mut r).unwrap();
                h.remove_edge(u, v).unwrap();
                h
            }
            1 => fixtures::latin5(),
            _ => {
                let n = r.gen_range(1..=25);
                let p = r.gen_range(0.1..0.9);
                random_graph(&mut r, n, p)
            }
        };
        let perm = random_perm(&mut r, g.order());
        let h = g.permute(&perm);
        let (cg, ch) = (canonical_cert(&g), canonical_cert(&h));
        if cg != ch {
            return Err(format!("certificate changed under relabeling (trial {i})"));
        }
        if g.permute(cg.labeling()) != cg.canonical_graph() {
            return Err(format!("witness labeling does not reproduce the certificate (trial {i})"));
        }
        match are_isomorphic(&g, &h).map_err(|e| e.to_string())? {
            Some(map) if is_isomorphism(&g, &h, &map) => {}
            _ => return Err(format!("no verified isomorphism returned (trial {i})")),
        }
    }
    Ok(format!("{trials} relabelings"))
}

fn random_orthogonal(r: &mut impl Rng, m: usize) -> DMatrix<f64> {
    let raw = DMatrix::from_fn(m, m, |_, _| r.gen_range(-1.0..1.0));
    raw.qr().q()
}

pub fn gram_factor_random(trials: usize) -> Outcome {
    let mut r = rng(20);
    let mut deficient = 0;
    let mut worst = 0.0f64;
    for i in 0..trials {
        let m = r.gen_range(1..=8);
        let n = r.gen_range(1..=8);
        let rank = if i % 3 == 0 { r.gen_range(0..=m.min(n)) } else { m.min(n) };
        let left = DMatrix::from_fn(m, rank, |_, _| r.gen_range(-2.0..2.0));
        let right = DMatrix::from_fn(rank, n, |_, _| r.gen_range(-2.0..2.0));
        let b = if rank == 0 { DMatrix::zeros(m, n) } else { left * right };
        if rank < m.min(n) {
            deficient += 1;
        }
        let c = random_orthogonal(&mut r, m) * &b;
        for method in [GramMethod::Svd, GramMethod::Reflection] {
            let w = gram_factor(&b, &c, method).map_err(|e| format!("{method:?} on instance {i}: {e}"))?;
            w.verify().map_err(|e| format!("{method:?} on instance {i}: {e}"))?;
            if w.orthogonality > 1e-9 * m as f64 {
                return Err(format!("{method:?} on instance {i}: Q not orthogonal"));
            }
            worst = worst.max(w.max_residual());
        }
    }
    Ok(format!("{trials} instances ({deficient} rank-deficient), worst residual {worst:.1e}"))
}

/// Roots of the exact adjacency polynomial grouped with multiplicity, for
/// graphs whose spectrum is integral.
pub fn integer_root_multiplicities(p: &IntPoly) -> HashMap<i64, usize> {
    let mut out = HashMap::new();
    let mut q = p.clone();
    let n = q.degree().unwrap_or(0) as i64;
    for root in -n..=n {
        let lin = IntPoly::linear_root(root);
        loop {
            let (quot, rem) = divide_monic(&q, &lin);
            if !rem.is_zero() {
                break;
            }
            *out.entry(root).or_insert(0) += 1;
            q = quot;
        }
    }
    out
}

fn divide_monic(p: &IntPoly, d: &IntPoly) -> (IntPoly, IntPoly) {
    let dd = d.degree().unwrap();
    let mut rem: Vec<BigInt> = p.coeffs().to_vec();
    if rem.len() <= dd {
        return (IntPoly::zero(), p.clone());
    }
    let mut quot = vec![BigInt::from(0); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        for (j, dc) in d.coeffs().iter().enumerate() {
            rem[i + j] -= &c * dc;
        }
        quot[i] = c;
    }
    (IntPoly::new(quot), IntPoly::new(rem))
}
