//! Simple undirected graphs with dense vertex ids, plus the metric and
//! neighborhood queries everything else is built on.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Shortest-path length, with unreachability as an explicit value that
/// compares greater than every finite distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

/// Dense bit-indexed subset of `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet(bits)
    }

    /// Builds a set from ids; ids outside the universe are rejected.
    pub fn from_ids<I: IntoIterator<Item = VertexId>>(universe: usize, ids: I) -> Result<Self> {
        let mut set = Self::empty(universe);
        for v in ids {
            if v >= universe {
                return Err(Error::arg(format!(
                    "vertex {v} outside range 0..{universe}"
                )));
            }
            set.0.insert(v);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(v)
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: VertexId) {
        self.0.insert(v);
    }

    pub fn remove(&mut self, v: VertexId) {
        self.0.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.0.difference_with(&other.0);
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Finite simple undirected graph on vertices `0..vertex_count`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted lexicographically;
/// an edge's position in that list is its edge id, which is how colorings
/// address edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    // sorted by neighbor; each entry carries the edge id
    adj: Vec<Vec<(VertexId, usize)>>,
}

impl Graph {
    /// Rejects self-loops, repeated edges, out-of-range endpoints and
    /// the zero-vertex graph.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if vertex_count == 0 {
            return Err(Error::arg("graph must have at least one vertex"));
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::arg(format!(
                    "edge {{{a},{b}}} outside vertex range 0..{vertex_count}"
                )));
            }
            if a == b {
                return Err(Error::arg(format!("self-loop at vertex {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::arg(format!(
                "parallel edge {{{},{}}}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unchecked(vertex_count, list))
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_unchecked(n.max(1), edges)
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::new(10, edges).expect("petersen is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::arg(format!(
                "vertex {v} outside range 0..{}",
                self.n
            )))
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// Neighbors of `v` paired with the id of the connecting edge.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, usize)] {
        &self.adj[v]
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn neighborhood(&self, v: VertexId) -> VertexSet {
        let mut set = VertexSet::empty(self.n);
        for w in self.neighbors(v) {
            set.insert(w);
        }
        set
    }

    pub fn closed_neighborhood(&self, v: VertexId) -> VertexSet {
        let mut set = self.neighborhood(v);
        set.insert(v);
        set
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn pendant_vertices(&self) -> VertexSet {
        let mut set = VertexSet::empty(self.n);
        for v in self.vertices().filter(|&v| self.degree(v) == 1) {
            set.insert(v);
        }
        set
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// BFS distances from every vertex of `sources` (multi-source).
    fn bfs(&self, sources: impl IntoIterator<Item = VertexId>) -> Vec<Distance> {
        let mut dist = vec![Distance::Unreachable; self.n];
        let mut queue = VecDeque::new();
        for s in sources {
            if dist[s] == Distance::Unreachable {
                dist[s] = Distance::Finite(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let Distance::Finite(du) = dist[u] else {
                unreachable!()
            };
            for w in self.neighbors(u) {
                if dist[w] == Distance::Unreachable {
                    dist[w] = Distance::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances_from(&self, v: VertexId) -> Result<Vec<Distance>> {
        self.check_vertex(v)?;
        Ok(self.bfs([v]))
    }

    /// `d(x, S)` for every vertex `x`.
    pub fn distances_to_set(&self, s: &VertexSet) -> Result<Vec<Distance>> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::arg("vertex set must be nonempty"));
        }
        Ok(self.bfs(s.iter()))
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<Distance> {
        self.check_vertex(v)?;
        Ok(self.distances_from(u)?[v])
    }

    pub fn eccentricity(&self, v: VertexId) -> Result<Distance> {
        Ok(self
            .distances_from(v)?
            .into_iter()
            .max()
            .unwrap_or(Distance::Finite(0)))
    }

    fn eccentricities(&self) -> impl Iterator<Item = Distance> + '_ {
        self.vertices()
            .map(|v| self.bfs([v]).into_iter().max().unwrap_or(Distance::Finite(0)))
    }

    pub fn diameter(&self) -> Distance {
        self.eccentricities().max().unwrap_or(Distance::Finite(0))
    }

    pub fn radius(&self) -> Distance {
        self.eccentricities().min().unwrap_or(Distance::Finite(0))
    }

    /// `N^k(S)`: the vertices at distance exactly `k` from `s`.
    pub fn k_step_neighborhood(&self, s: &VertexSet, k: usize) -> Result<VertexSet> {
        let dist = self.distances_to_set(s)?;
        let mut out = VertexSet::empty(self.n);
        for (v, d) in dist.into_iter().enumerate() {
            if d == Distance::Finite(k) {
                out.insert(v);
            }
        }
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs([0]).iter().all(|d| d.is_finite())
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// True iff `h` has the same vertices, a subset of the edges, and is connected.
    pub fn is_spanning_connected_subgraph(&self, h: &Graph) -> Result<bool> {
        if h.n != self.n {
            return Err(Error::arg(format!(
                "vertex counts differ: {} vs {}",
                self.n, h.n
            )));
        }
        Ok(h.edges.iter().all(|&(u, v)| self.has_edge(u, v)) && h.is_connected())
    }

    /// `G[D]` together with the map from new ids to original ids.
    pub fn induced_subgraph(&self, d: &VertexSet) -> Result<(Graph, Vec<VertexId>)> {
        self.check_set(d)?;
        if d.is_empty() {
            return Err(Error::arg("vertex set must be nonempty"));
        }
        let old_ids = d.to_vec();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| d.contains(u) && d.contains(v))
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        let mut sorted = edges;
        sorted.sort_unstable();
        Ok((Graph::from_sorted_unchecked(old_ids.len(), sorted), old_ids))
    }

    /// Whether `G[d]` is connected, without building it.
    pub fn induces_connected(&self, d: &VertexSet) -> bool {
        let Some(start) = d.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::empty(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if d.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == d.len()
    }

    /// Spanning subgraph keeping only the listed edge ids.
    pub fn spanning_subgraph(&self, keep: impl IntoIterator<Item = usize>) -> Graph {
        let mut edges: Vec<_> = keep.into_iter().map(|e| self.edges[e]).collect();
        edges.sort_unstable();
        edges.dedup();
        Graph::from_sorted_unchecked(self.n, edges)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.n {
            Ok(())
        } else {
            Err(Error::arg(format!(
                "vertex set over 0..{} used with a graph on {} vertices",
                s.universe(),
                self.n
            )))
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied()).unwrap()
    }

    #[test]
    fn distance_basics() {
        let p4 = Graph::path(4);
        assert_eq!(p4.distance(0, 3).unwrap(), Distance::Finite(3));
        assert_eq!(p4.distance(2, 2).unwrap(), Distance::Finite(0));
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.distance(0, 2).unwrap(), Distance::Unreachable);
        assert!(p4.distance(0, 4).is_err());
    }

    #[test]
    fn diameter_and_radius() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.diameter(), Distance::Finite(1));
        assert_eq!(k5.radius(), Distance::Finite(1));
        let p4 = Graph::path(4);
        assert_eq!(p4.diameter(), Distance::Finite(3));
        assert_eq!(p4.radius(), Distance::Finite(2));
        let star = Graph::star(4);
        assert_eq!(star.radius(), Distance::Finite(1));
        assert_eq!(star.diameter(), Distance::Finite(2));
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.diameter(), Distance::Unreachable);
        assert_eq!(two.eccentricity(0).unwrap(), Distance::Unreachable);
    }

    #[test]
    fn neighborhoods() {
        let c6 = Graph::cycle(6);
        let s = set(6, &[0]);
        assert_eq!(c6.k_step_neighborhood(&s, 2).unwrap(), set(6, &[2, 4]));
        assert_eq!(c6.k_step_neighborhood(&s, 0).unwrap(), s);
        assert!(c6.k_step_neighborhood(&VertexSet::empty(6), 1).is_err());
    }

    #[test]
    fn pendants_and_min_degree() {
        let p3 = Graph::path(3);
        assert_eq!(p3.pendant_vertices(), set(3, &[0, 2]));
        assert_eq!(p3.min_degree(), 1);
        let c5 = Graph::cycle(5);
        assert!(c5.pendant_vertices().is_empty());
        assert_eq!(c5.min_degree(), 2);
        assert_eq!(Graph::star(3).pendant_vertices(), set(4, &[1, 2, 3]));
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4);
        let (k3, map) = k4.induced_subgraph(&set(4, &[0, 2, 3])).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(map, vec![0, 2, 3]);

        let p4 = Graph::path(4);
        let (h, map) = p4.induced_subgraph(&set(4, &[0, 1, 3])).unwrap();
        assert_eq!(h.edges(), &[(0, 1)]);
        assert_eq!(map, vec![0, 1, 3]);
        assert!(!h.is_connected());

        let (same, _) = p4.induced_subgraph(&VertexSet::full(4)).unwrap();
        assert_eq!(same, p4);
        assert!(p4.induced_subgraph(&VertexSet::empty(4)).is_err());
    }

    #[test]
    fn spanning_subgraphs() {
        let k4 = Graph::complete(4);
        assert!(k4.is_spanning_connected_subgraph(&Graph::path(4)).unwrap());
        let matching = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!k4.is_spanning_connected_subgraph(&matching).unwrap());
        assert!(k4.is_spanning_connected_subgraph(&k4).unwrap());
        assert!(k4.is_spanning_connected_subgraph(&Graph::path(3)).is_err());
        // not a subgraph: C4 edge {0,3} missing from P4
        assert!(!Graph::path(4)
            .is_spanning_connected_subgraph(&Graph::cycle(4))
            .unwrap());
    }

    #[test]
    fn rejects_non_simple_input() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn edge_ids_follow_sorted_order() {
        let g = Graph::new(4, [(3, 2), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.edge_id(2, 1), Some(1));
        assert_eq!(g.edge_id(0, 3), None);
    }
}
