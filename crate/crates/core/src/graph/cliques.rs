use std::collections::BTreeSet;

use super::{bits, Graph};

/// All maximal cliques, each as a sorted vertex list, in lexicographic order.
///
/// Bron–Kerbosch with Tomita pivoting over bitset neighbourhoods.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let words = bits::words_for(n).max(1);
    let mut p = vec![0u64; words];
    for v in 0..n {
        bits::insert(&mut p, v);
    }
    let x = vec![0u64; words];
    let mut out = Vec::new();
    let mut r = Vec::new();
    expand(g, &mut r, p, x, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(g: &Graph, r: &mut Vec<usize>, mut p: Vec<u64>, mut x: Vec<u64>, out: &mut Vec<Vec<usize>>) {
    if bits::is_empty(&p) {
        if bits::is_empty(&x) {
            out.push(r.clone());
        }
        return;
    }
    // pivot maximising |P ∩ N(u)| over P ∪ X
    let pivot = bits::ones(&p)
        .chain(bits::ones(&x))
        .max_by_key(|&u| bits::count_and(&p, g.row(u)))
        .expect("P is non-empty");
    let candidates: Vec<usize> = bits::ones(&p).filter(|&v| !g.has_edge(pivot, v)).collect();
    for v in candidates {
        let nv = g.row(v);
        r.push(v);
        expand(g, r, bits::and(&p, nv), bits::and(&x, nv), out);
        r.pop();
        bits::remove(&mut p, v);
        bits::insert(&mut x, v);
    }
}

/// All `m`-vertex cliques as sorted vertex lists, in lexicographic order.
pub fn cliques_of_size(g: &Graph, m: usize) -> Vec<Vec<usize>> {
    if m == 0 || m > g.order() {
        return Vec::new();
    }
    let mut found = BTreeSet::new();
    for clique in maximal_cliques(g) {
        if clique.len() >= m {
            for_each_subset(&clique, m, &mut |s| {
                found.insert(s.to_vec());
            });
        }
    }
    found.into_iter().collect()
}

/// Calls `f` on every `m`-subset of `items` (in lexicographic order).
pub(crate) fn for_each_subset<F: FnMut(&[usize])>(items: &[usize], m: usize, f: &mut F) {
    fn rec<F: FnMut(&[usize])>(items: &[usize], start: usize, m: usize, acc: &mut Vec<usize>, f: &mut F) {
        if acc.len() == m {
            f(acc);
            return;
        }
        let need = m - acc.len();
        for i in start..=items.len() - need {
            acc.push(items[i]);
            rec(items, i + 1, m, acc, f);
            acc.pop();
        }
    }
    if m <= items.len() {
        rec(items, 0, m, &mut Vec::with_capacity(m), f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedGraph};

    #[test]
    fn triangles_of_k4() {
        let c = cliques_of_size(&Graph::complete(4), 3);
        assert_eq!(c, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn petersen_is_triangle_free() {
        let p = named_graph(NamedGraph::Petersen).unwrap();
        assert!(cliques_of_size(&p, 3).is_empty());
        assert_eq!(cliques_of_size(&p, 2).len(), 15);
        assert_eq!(maximal_cliques(&p).len(), 15);
    }

    #[test]
    fn isolated_vertices_are_maximal_cliques() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1], vec![2]]);
        assert_eq!(cliques_of_size(&g, 1).len(), 3);
        assert!(cliques_of_size(&g, 4).is_empty());
    }
}
