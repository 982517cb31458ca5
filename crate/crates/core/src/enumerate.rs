//! Exhaustive enumeration of small labeled graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count enumerated in memory.
pub const ENUMERATION_LIMIT: usize = 6;

/// Every labeled connected graph on `n` vertices, each exactly once, in
/// order of the bitmask over the pairs `(0,1), (0,2), …, (n-2,n-1)`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::arg("graphs need at least one vertex"));
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "labeled enumeration is limited to 6 vertices; supply larger corpora as graph6 files",
            explored: 0,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        // pairs are already sorted, so the edge list is canonical
        let g = Graph::from_sorted_unchecked(n, edges);
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Connected labeled graphs on `lo..=hi` vertices.
pub fn enumerate_connected_range(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo.max(1)..=hi {
        out.extend(enumerate_connected_graphs(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert!(enumerate_connected_graphs(7).is_err());
        assert!(enumerate_connected_graphs(0).is_err());
    }

    #[test]
    fn n3_graphs() {
        let gs = enumerate_connected_graphs(3).unwrap();
        assert_eq!(gs.iter().filter(|g| g.is_complete()).count(), 1);
        assert_eq!(gs.iter().filter(|g| g.edge_count() == 2).count(), 3);
    }
}
