//! Built-in graphs: two SRG(25,12,5,6) hosts, the Z5 Latin square graph,
//! and the small patterns deleted from cliques.

use crate::error::Result;
use crate::graph::{latin_square_z5, named_graph, parse_graph6, Graph, NamedGraph};

/// graph6 of the first SRG(25,12,5,6) host whose edge deletions are pairwise non-isomorphic.
pub const X1_GRAPH6: &str = "X~zfCqTc{YPT`fUQidaeNRKxItIMpholosZFKjXHZGnDZDYHwuF";
/// graph6 of the second such host.
pub const X3_GRAPH6: &str = "X~zfCqTc{YPR`jUQidaeNRLXIrIMphoxKsVXKixPZCnD[fBHuQl";

pub const Y1_EDGES: [(usize, usize); 7] = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 3), (1, 4)];
/// Vertex 0 is pendant; the rest span a K4.
pub const Y2_EDGES: [(usize, usize); 7] = [(1, 0), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

pub fn x1() -> Graph {
    parse_graph6(X1_GRAPH6.as_bytes()).expect("embedded graph6 is valid")
}

pub fn x3() -> Graph {
    parse_graph6(X3_GRAPH6.as_bytes()).expect("embedded graph6 is valid")
}

pub fn latin5() -> Graph {
    latin_square_z5()
}

pub fn y1() -> Graph {
    Graph::from_edges(5, &Y1_EDGES).expect("valid edges")
}

pub fn y2() -> Graph {
    Graph::from_edges(5, &Y2_EDGES).expect("valid edges")
}

/// `P3` as the path `1 – 0 – 2`.
pub fn p3() -> Graph {
    Graph::from_edges(3, &[(0, 1), (0, 2)]).expect("valid edges")
}

/// Looks up a pattern by name: `K2`, `K3`, `K4`, `P3`, `Y1`, `Y2`.
pub fn pattern(name: &str) -> Option<Graph> {
    match name.to_ascii_uppercase().as_str() {
        "K2" => Some(Graph::complete(2)),
        "K3" => Some(Graph::complete(3)),
        "K4" => Some(Graph::complete(4)),
        "P3" => Some(p3()),
        "Y1" => Some(y1()),
        "Y2" => Some(y2()),
        _ => None,
    }
}

/// Resolves a built-in graph: `x1`, `x3`, `latin5` (alias `x14`), `y1`, `y2`,
/// `p3`, or any name accepted by [`NamedGraph`].
pub fn builtin(name: &str) -> Result<Graph> {
    match name.trim().to_ascii_lowercase().as_str() {
        "x1" => Ok(x1()),
        "x3" => Ok(x3()),
        "latin5" | "x14" => Ok(latin5()),
        "y1" => Ok(y1()),
        "y2" => Ok(y2()),
        "p3" => Ok(p3()),
        other => named_graph(other.parse::<NamedGraph>()?),
    }
}

/// Pattern names in table column order.
pub const TABLE_PATTERNS: [&str; 6] = ["K2", "K3", "K4", "P3", "Y1", "Y2"];
