//! Canonical labeling by individualization and refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell,
//! recurse. Every discrete leaf is a labeling; the canonical form is the
//! labeling whose relabeled upper triangle is lexicographically smallest.
//! Leaves that reproduce an already seen graph yield automorphisms, which
//! prune sibling subtrees lying in the same orbit of the pointwise
//! stabilizer of the current path. That pruning only skips subtrees that are
//! images of explored ones, so the minimum is unchanged.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Canonical certificate of a graph: its relabeled adjacency bit string plus
/// the labeling that produced it.
#[derive(Clone, Debug)]
pub struct CanonicalCert {
    bytes: Vec<u8>,
    /// `labeling[v]` is the canonical position of vertex `v`.
    labeling: Vec<usize>,
}

impl CanonicalCert {
    /// Four big-endian bytes of `n` followed by the upper triangle
    /// `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed MSB first.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }

    pub fn hex(&self) -> String {
        let mut s = String::with_capacity(self.bytes.len() * 2);
        for b in &self.bytes {
            write!(s, "{b:02x}").unwrap();
        }
        s
    }

    /// The canonical graph itself, rebuilt from the certificate bytes.
    pub fn canonical_graph(&self) -> Graph {
        let n = self.labeling.len();
        let mut g = Graph::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bytes[4 + k / 8] >> (7 - k % 8) & 1 == 1 {
                    g.set(i, j, true);
                }
                k += 1;
            }
        }
        g
    }
}

impl PartialEq for CanonicalCert {
    fn eq(&self, other: &Self) -> bool {
        self.bytes == other.bytes
    }
}

impl Eq for CanonicalCert {}

impl Hash for CanonicalCert {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bytes.hash(state);
    }
}

impl PartialOrd for CanonicalCert {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalCert {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bytes.cmp(&other.bytes)
    }
}

pub fn canonical_cert(g: &Graph) -> CanonicalCert {
    let n = g.order();
    let mut search = Search {
        g,
        n,
        best: None,
        first: None,
        automorphisms: Vec::new(),
    };
    if n > 0 {
        search.descend(vec![0; n], &mut Vec::new());
    }
    let (words, labeling) = search.best.unwrap_or_default();
    CanonicalCert {
        bytes: pack_bytes(n, &words),
        labeling,
    }
}

/// Returns an isomorphism `g → h` (`map[v]` is the image of `v`) when one exists.
///
/// Any returned mapping has been checked edge by edge.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(None);
    }
    let (cg, ch) = (canonical_cert(g), canonical_cert(h));
    if cg != ch {
        return Ok(None);
    }
    let mut inverse_h = vec![0; h.order()];
    for (v, &pos) in ch.labeling.iter().enumerate() {
        inverse_h[pos] = v;
    }
    let map: Vec<usize> = cg.labeling.iter().map(|&pos| inverse_h[pos]).collect();
    if !is_isomorphism(g, h, &map) {
        return Err(Error::Internal("certificate match without a valid isomorphism".into()));
    }
    Ok(Some(map))
}

/// Checks that `map` is a bijection carrying the edges of `g` onto those of `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || map.len() != n || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    g.edges().into_iter().all(|(u, v)| h.has_edge(map[u], map[v]))
}

fn pack_bytes(n: usize, words: &[u64]) -> Vec<u8> {
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(8));
    out.extend_from_slice(&(n as u32).to_be_bytes());
    for i in 0..bits.div_ceil(8) {
        out.push((words[i / 8] >> (56 - 8 * (i % 8))) as u8);
    }
    out
}

type Leaf = (Vec<u64>, Vec<usize>);

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<Leaf>,
    first: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// `colors[v]` is the start position of the cell containing `v`.
    fn descend(&mut self, mut colors: Vec<usize>, path: &mut Vec<usize>) {
        refine(self.g, &mut colors);

        let n = self.n;
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaf(colors);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();

        let mut explored: Vec<usize> = Vec::with_capacity(cell.len());
        for &w in &cell {
            if !explored.is_empty() && self.in_explored_orbit(path, &explored, w) {
                continue;
            }
            let mut child = colors.clone();
            for &x in &cell {
                child[x] = if x == w { target } else { target + 1 };
            }
            path.push(w);
            self.descend(child, path);
            path.pop();
            explored.push(w);
        }
    }

    /// Is `w` in the orbit of some explored vertex under the group generated
    /// by the known automorphisms that fix `path` pointwise?
    fn in_explored_orbit(&self, path: &[usize], explored: &[usize], w: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().all(|&v| gamma[v] == v) {
                any = true;
                for v in 0..self.n {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }

    fn leaf(&mut self, labeling: Vec<usize>) {
        let words = relabeled_bits(self.g, &labeling);
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.0 == words {
                // same relabeled graph: known⁻¹ ∘ labeling is an automorphism
                let mut inverse = vec![0; self.n];
                for (v, &pos) in known.1.iter().enumerate() {
                    inverse[pos] = v;
                }
                let gamma: Vec<usize> = labeling.iter().map(|&pos| inverse[pos]).collect();
                if gamma.iter().enumerate().any(|(v, &x)| v != x) {
                    self.automorphisms.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((words.clone(), labeling.clone()));
        }
        match &self.best {
            Some((best, _)) if *best <= words => {}
            _ => self.best = Some((words, labeling)),
        }
    }
}

/// Upper triangle of the graph relabeled by `labeling`, in graph6 bit order,
/// packed MSB first into 64-bit words.
fn relabeled_bits(g: &Graph, labeling: &[usize]) -> Vec<u64> {
    let n = labeling.len();
    let mut at = vec![0; n];
    for (v, &pos) in labeling.iter().enumerate() {
        at[pos] = v;
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; bits.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        let row = g.row(at[j]);
        for &ai in &at[..j] {
            if crate::graph::bits::test(row, ai) {
                words[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    words
}

/// Refines `colors` to the coarsest equitable partition below it.
///
/// Vertices are sorted by (current colour, multiset of neighbour colours);
/// each vertex's new colour is the position of the first vertex sharing its
/// signature, so cells only split and keep their place in the order.
pub(crate) fn refine(g: &Graph, colors: &mut [usize]) {
    let n = colors.len();
    let mut order: Vec<usize> = (0..n).collect();
    let mut cells = count_cells(colors);
    loop {
        let signatures: Vec<Vec<(usize, u32)>> = (0..n)
            .map(|v| {
                let mut counts: Vec<(usize, u32)> = Vec::new();
                let mut nbr: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
                nbr.sort_unstable();
                for c in nbr {
                    match counts.last_mut() {
                        Some((last, k)) if *last == c => *k += 1,
                        _ => counts.push((c, 1)),
                    }
                }
                counts
            })
            .collect();
        order.sort_by(|&a, &b| colors[a].cmp(&colors[b]).then_with(|| signatures[a].cmp(&signatures[b])));
        let mut next = vec![0; n];
        for i in 1..n {
            let (a, b) = (order[i - 1], order[i]);
            next[b] = if colors[a] == colors[b] && signatures[a] == signatures[b] {
                next[a]
            } else {
                i
            };
        }
        colors.copy_from_slice(&next);
        let now = count_cells(colors);
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut seen = vec![false; colors.len()];
    colors.iter().filter(|&&c| !std::mem::replace(&mut seen[c], true)).count()
}
