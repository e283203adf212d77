use serde::{Deserialize, Serialize};

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IncidenceMode {
    /// Entries `0, ±1`; `B Bᵀ = L`.
    Oriented,
    /// Entries `0, 1`; `B Bᵀ = S`.
    Unsigned,
}

/// Vertex-by-edge incidence matrix. Columns follow `Graph::edges()` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub mode: IncidenceMode,
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(|r| r.to_vec()).collect()
    }

    /// `B Bᵀ`.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.rows]; self.rows];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = (0..self.cols).map(|c| self.get(i, c) * self.get(j, c)).sum();
            }
        }
        out
    }
}

/// Incidence matrix of `g`. In oriented mode the edge `{u, v}` with `u < v`
/// has tail `u` (entry −1) and head `v` (entry +1).
pub fn incidence(g: &Graph, mode: IncidenceMode) -> IncidenceMatrix {
    let edges = g.edges();
    let (rows, cols) = (g.order(), edges.len());
    let mut entries = vec![0i64; rows * cols];
    for (c, &(u, v)) in edges.iter().enumerate() {
        entries[u * cols + c] = match mode {
            IncidenceMode::Oriented => -1,
            IncidenceMode::Unsigned => 1,
        };
        entries[v * cols + c] = 1;
    }
    IncidenceMatrix {
        mode,
        rows,
        cols,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_gram_matrices() {
        let k2 = Graph::complete(2);
        assert_eq!(incidence(&k2, IncidenceMode::Oriented).gram(), vec![vec![1, -1], vec![-1, 1]]);
        assert_eq!(incidence(&k2, IncidenceMode::Unsigned).gram(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn triangle_laplacian() {
        let b = incidence(&Graph::complete(3), IncidenceMode::Oriented);
        let expect = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert_eq!(b.gram(), expect);
        assert_eq!(b.to_rows()[0], vec![-1, -1, 0]);
    }
}
