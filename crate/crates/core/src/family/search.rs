use std::collections::BTreeMap;

use crate::charpoly::{charpoly, SpectralKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::canonical_cert;
use crate::poly::CharPoly;

pub const MAX_SEARCH_ORDER: usize = 8;

/// One representative of every isomorphism class on `n` vertices, built by
/// adding a vertex to each class on `n − 1` vertices in every possible way.
/// Sorted by canonical certificate.
pub fn all_graph_classes(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_SEARCH_ORDER {
        return Err(Error::TooLarge(n));
    }
    let mut classes = vec![Graph::new(n.min(1))];
    for order in 2..=n {
        let mut next = BTreeMap::new();
        for g in &classes {
            for mask in 0u32..(1 << (order - 1)) {
                let mut h = Graph::new(order);
                for (u, v) in g.edges() {
                    h.add_edge(u, v)?;
                }
                for u in (0..order - 1).filter(|u| mask >> u & 1 == 1) {
                    h.add_edge(u, order - 1)?;
                }
                let cert = canonical_cert(&h);
                next.entry(cert.bytes().to_vec()).or_insert_with(|| cert.canonical_graph());
            }
        }
        classes = next.into_values().collect();
    }
    if n == 0 {
        classes = vec![Graph::new(0)];
    }
    Ok(classes)
}

/// All non-isomorphic pairs on `n` vertices with equal characteristic
/// polynomial of `kind` (and, when `require_complement`, equal polynomial of
/// the complements too). Graphs where the random-walk polynomial is undefined
/// are skipped for that kind.
pub fn search_cospectral_pairs(n: usize, kind: SpectralKind, require_complement: bool) -> Result<Vec<(Graph, Graph)>> {
    let mut groups: BTreeMap<(CharPoly, Option<CharPoly>), Vec<Graph>> = BTreeMap::new();
    for g in all_graph_classes(n)? {
        let Ok(p) = charpoly(&g, kind) else { continue };
        let key = if require_complement {
            match charpoly(&g.complement(), kind) {
                Ok(q) => (p, Some(q)),
                Err(_) => continue,
            }
        } else {
            (p, None)
        };
        groups.entry(key).or_default().push(g);
    }
    let mut pairs = Vec::new();
    for members in groups.values() {
        for (i, g) in members.iter().enumerate() {
            for h in &members[i + 1..] {
                pairs.push((g.clone(), h.clone()));
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_graph_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn no_adjacency_pairs_on_four_vertices() {
        assert!(search_cospectral_pairs(4, SpectralKind::Adjacency, false).unwrap().is_empty());
    }

    #[test]
    fn too_large() {
        assert_eq!(all_graph_classes(9).unwrap_err(), Error::TooLarge(9));
    }
}
