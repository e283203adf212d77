//! Undirected simple graphs stored as symmetric adjacency bit-matrices.

pub(crate) mod bits;
mod cliques;
mod graph6;
mod incidence;
mod named;

use std::fmt;

use crate::error::{Error, Result};

pub use cliques::{cliques_of_size, maximal_cliques};
pub use graph6::{parse_graph6, to_graph6};
pub use incidence::{incidence, IncidenceMatrix, IncidenceMode};
pub use named::{latin_square_z5, named_graph, NamedGraph};

/// An undirected simple graph on vertices `0..n`.
///
/// Each row of the adjacency matrix is a bitset of `stride` words. The
/// matrix is always symmetric with a zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let stride = bits::words_for(n).max(1);
        Graph {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n).complement()
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        bits::count(&self.bits) / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    /// Neighbourhood of `u` as a bitset.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.stride..(u + 1) * self.stride]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        bits::count(self.row(u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|u| self.degree(u)).min()
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        bits::count_and(self.row(u), self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.set(u, v, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u.min(v), u.max(v)));
        }
        self.set(u, v, false);
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::OutOfRange(u));
        }
        if v >= self.n {
            return Err(Error::OutOfRange(v));
        }
        if u == v {
            return Err(Error::BadEdgeList(format!("loop at vertex {u}")));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn set(&mut self, u: usize, v: usize, on: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let s = self.stride;
        if on {
            bits::insert(&mut self.bits[u * s..(u + 1) * s], v);
            bits::insert(&mut self.bits[v * s..(v + 1) * s], u);
        } else {
            bits::remove(&mut self.bits[u * s..(u + 1) * s], v);
            bits::remove(&mut self.bits[v * s..(v + 1) * s], u);
        }
    }

    /// The complement graph, with adjacency `J - I - A`.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    /// Removes every edge of `es`; all of them must be present.
    pub fn delete_edges(&self, es: &EdgeList) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in es.as_slice() {
            g.remove_edge(u, v)?;
        }
        Ok(g)
    }

    /// Induced subgraph on the remaining vertices, re-indexed in order.
    pub fn delete_vertices(&self, vs: &[usize]) -> Result<Graph> {
        let mut drop = vec![false; self.n];
        for &v in vs {
            if v >= self.n {
                return Err(Error::OutOfRange(v));
            }
            drop[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        Ok(self.induced(&keep))
    }

    /// Induced subgraph on `keep`, with `keep[i]` becoming vertex `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::new(keep.len());
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set(i, j, true);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// A list of distinct unordered vertex pairs, stored with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeList(Vec<(usize, usize)>);

impl EdgeList {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (u, v) in pairs {
            if u == v {
                return Err(Error::BadEdgeList(format!("loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if out.contains(&e) {
                return Err(Error::BadEdgeList(format!("duplicate pair {{{}, {}}}", e.0, e.1)));
            }
            out.push(e);
        }
        Ok(EdgeList(out))
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
