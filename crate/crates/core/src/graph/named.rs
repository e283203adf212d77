use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Standard test graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Cycle(usize),
    Complete(usize),
    Path(usize),
    Petersen,
    /// Line graph of `K_n`.
    Triangular(usize),
}

pub fn named_graph(name: NamedGraph) -> Result<Graph> {
    match name {
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(Error::BadParameter(format!("cycle needs n >= 3, got {n}")));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        NamedGraph::Complete(n) => {
            if n == 0 {
                return Err(Error::BadParameter("complete graph needs n >= 1".into()));
            }
            Ok(Graph::complete(n))
        }
        NamedGraph::Path(n) => {
            if n == 0 {
                return Err(Error::BadParameter("path needs n >= 1".into()));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        NamedGraph::Petersen => Ok(kneser_pairs(5)),
        NamedGraph::Triangular(n) => {
            if n < 2 {
                return Err(Error::BadParameter(format!("triangular needs n >= 2, got {n}")));
            }
            let pairs = pairs_of(n);
            let mut g = Graph::new(pairs.len());
            for (i, a) in pairs.iter().enumerate() {
                for (j, b) in pairs.iter().enumerate().skip(i + 1) {
                    let share = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
                    if share {
                        g.set(i, j, true);
                    }
                }
            }
            Ok(g)
        }
    }
}

fn pairs_of(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect()
}

/// 2-subsets of `0..n`, adjacent when disjoint. `n = 5` gives Petersen.
fn kneser_pairs(n: usize) -> Graph {
    let pairs = pairs_of(n);
    let mut g = Graph::new(pairs.len());
    for (i, a) in pairs.iter().enumerate() {
        for (j, b) in pairs.iter().enumerate().skip(i + 1) {
            if a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1 {
                g.set(i, j, true);
            }
        }
    }
    g
}

/// Latin square graph of the addition table of Z5.
///
/// Vertex `5i + j` is the cell in row `i`, column `j`, holding `i + j mod 5`.
/// Cells are adjacent when they share a row, a column, or a symbol.
pub fn latin_square_z5() -> Graph {
    let mut g = Graph::new(25);
    for a in 0..25 {
        for b in (a + 1)..25 {
            let (ra, ca) = (a / 5, a % 5);
            let (rb, cb) = (b / 5, b % 5);
            if ra == rb || ca == cb || (ra + ca) % 5 == (rb + cb) % 5 {
                g.set(a, b, true);
            }
        }
    }
    g
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `petersen`, `cycleN`, `completeN`, `pathN`, `triangularN`
    /// (with or without a separator such as `cycle-5` or `cycle(5)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "petersen" {
            return Ok(NamedGraph::Petersen);
        }
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| bad_name(&s))?;
        let (head, tail) = s.split_at(split);
        let head = head.trim_end_matches(['-', '_', '(']);
        let num: usize = tail.trim_end_matches(')').parse().map_err(|_| bad_name(&s))?;
        match head {
            "cycle" | "c" => Ok(NamedGraph::Cycle(num)),
            "complete" | "k" => Ok(NamedGraph::Complete(num)),
            "path" | "p" => Ok(NamedGraph::Path(num)),
            "triangular" | "t" => Ok(NamedGraph::Triangular(num)),
            _ => Err(bad_name(&s)),
        }
    }
}

fn bad_name(s: &str) -> Error {
    Error::BadParameter(format!("unknown graph name {s:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn girth(g: &Graph) -> usize {
        let n = g.order();
        let mut best = usize::MAX;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in g.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn petersen_shape() {
        let p = named_graph(NamedGraph::Petersen).unwrap();
        assert_eq!(p.order(), 10);
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert_eq!(girth(&p), 5);
    }

    #[test]
    fn triangular_seven() {
        let t = named_graph(NamedGraph::Triangular(7)).unwrap();
        assert_eq!(t.order(), 21);
        assert!(t.degrees().iter().all(|&d| d == 10));
    }

    #[test]
    fn latin_square_is_12_regular() {
        let g = latin_square_z5();
        assert_eq!(g.order(), 25);
        assert!(g.degrees().iter().all(|&d| d == 12));
        assert_eq!(super::super::cliques_of_size(&g, 5).len(), 15);
    }

    #[test]
    fn cycle_four_and_bad_parameters() {
        let c4 = named_graph(NamedGraph::Cycle(4)).unwrap();
        assert_eq!(c4.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(named_graph(NamedGraph::Cycle(2)).is_err());
        assert!(named_graph(NamedGraph::Path(0)).is_err());
        assert!(named_graph(NamedGraph::Triangular(1)).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("petersen".parse::<NamedGraph>().unwrap(), NamedGraph::Petersen);
        assert_eq!("cycle5".parse::<NamedGraph>().unwrap(), NamedGraph::Cycle(5));
        assert_eq!("triangular(7)".parse::<NamedGraph>().unwrap(), NamedGraph::Triangular(7));
        assert_eq!("complete-4".parse::<NamedGraph>().unwrap(), NamedGraph::Complete(4));
        assert!("dodecahedron".parse::<NamedGraph>().is_err());
    }
}
