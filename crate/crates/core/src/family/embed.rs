use std::collections::HashSet;

use serde::Serialize;

use crate::graph::{cliques_of_size, EdgeList, Graph};

/// A clique of the host together with a bijection from pattern vertices onto it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub clique: Vec<usize>,
    /// `map[i]` is the host vertex carrying pattern vertex `i`.
    pub map: Vec<usize>,
}

impl Embedding {
    /// Host edges covered by the pattern's edges, sorted.
    pub fn deleted_edges(&self, pattern: &Graph) -> Vec<(usize, usize)> {
        let mut es: Vec<(usize, usize)> = pattern
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (self.map[a], self.map[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        es.sort_unstable();
        es
    }

    pub fn apply(&self, host: &Graph, pattern: &Graph) -> Graph {
        let es = EdgeList::new(self.deleted_edges(pattern)).expect("pattern edges are distinct");
        host.delete_edges(&es).expect("clique edges exist in the host")
    }
}

/// Rearranges `p` into the next permutation in lexicographic order.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("a larger element exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every way to lay `pattern` onto a clique of exactly `|V(pattern)|` host
/// vertices, keeping only the first embedding for each deleted edge set.
///
/// Cliques come in lexicographic order and bijections in lexicographic
/// order within a clique, so the output is deterministic.
pub fn enumerate_embeddings(host: &Graph, pattern: &Graph) -> Vec<Embedding> {
    let m = pattern.order();
    if m == 0 || m > host.order() {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for clique in cliques_of_size(host, m) {
        let mut map = clique.clone();
        loop {
            let e = Embedding { clique: clique.clone(), map: map.clone() };
            if seen.insert(e.deleted_edges(pattern)) {
                out.push(e);
            }
            if !next_permutation(&mut map) {
                break;
            }
        }
    }
    out
}
