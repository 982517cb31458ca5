use std::collections::BTreeSet;

use crate::classes::Rational;
use crate::domination::classify;
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph, VertexId, VertexSet};

/// Closed intervals `[l, r]`, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRepresentation {
    intervals: Vec<(Rational, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatingPath {
    pub vertices: Vec<VertexId>,
    pub diameter: usize,
    /// Whether the path has at most `diameter - 2` edges.
    pub within_length_bound: bool,
}

impl IntervalRepresentation {
    pub fn new(intervals: Vec<(Rational, Rational)>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::arg("interval representation is empty"));
        }
        if let Some(v) = intervals.iter().position(|(l, r)| l > r) {
            return Err(Error::arg(format!("interval of vertex {v} has l > r")));
        }
        Ok(IntervalRepresentation { intervals })
    }

    pub fn from_integers(intervals: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            intervals
                .iter()
                .map(|&(l, r)| (Rational::from_integer(l), Rational::from_integer(r)))
                .collect(),
        )
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intersects(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = &self.intervals[u];
        let (c, d) = &self.intervals[v];
        a <= d && c <= b
    }

    pub fn realize(&self) -> Result<Graph> {
        let n = self.intervals.len();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.intersects(u, v));
        Graph::new(n, edges)
    }

    /// Greedy sweep: start from the neighbor (or self) of the interval with
    /// the leftmost right endpoint that reaches furthest right, then keep
    /// stepping to the neighbor reaching furthest right until every vertex
    /// is dominated.
    pub fn dominating_path(&self) -> Result<DominatingPath> {
        let g = self.realize()?;
        g.require_connected()?;
        if g.is_complete() {
            return Err(Error::arg(
                "complete interval graph: every vertex dominates, no path structure",
            ));
        }
        let right = |v: VertexId| self.intervals[v].1;
        let furthest = |v: VertexId| {
            g.closed_neighborhood(v)
                .iter()
                .max_by(|&a, &b| right(a).cmp(&right(b)).then(b.cmp(&a)))
                .expect("closed neighborhood is nonempty")
        };
        let first = g
            .vertices()
            .min_by(|&a, &b| right(a).cmp(&right(b)).then(a.cmp(&b)))
            .unwrap();
        let mut path = vec![furthest(first)];
        let mut dominated = g.closed_neighborhood(path[0]);
        while dominated.len() < g.vertex_count() {
            let last = *path.last().unwrap();
            let next = furthest(last);
            if next == last {
                return Err(Error::Disconnected);
            }
            dominated.union_with(&g.closed_neighborhood(next));
            path.push(next);
        }
        let set = VertexSet::from_ids(g.vertex_count(), path.iter().copied())?;
        debug_assert!(classify(&g, &set)?.is_dominating);
        let Distance::Finite(diameter) = g.diameter() else {
            return Err(Error::Disconnected);
        };
        Ok(DominatingPath {
            within_length_bound: path.len() < diameter,
            diameter,
            vertices: path,
        })
    }

    /// Maximal cliques of `members ∪ {root}` that contain `root`, read off
    /// the intervals: every such clique is the set of members stabbed by a
    /// common point of the root's interval.
    pub fn rooted_cliques(&self, root: VertexId, members: &[VertexId]) -> Vec<Vec<VertexId>> {
        let (lv, _) = self.intervals[root];
        let touching: Vec<VertexId> = members
            .iter()
            .copied()
            .filter(|&w| w != root && self.intersects(root, w))
            .collect();
        let mut cliques: BTreeSet<Vec<VertexId>> = BTreeSet::new();
        for &w in &touching {
            let p = self.intervals[w].0.max(lv);
            let clique: Vec<VertexId> = touching
                .iter()
                .copied()
                .filter(|&x| self.intervals[x].0 <= p && p <= self.intervals[x].1)
                .collect();
            cliques.insert(clique);
        }
        let all: Vec<_> = cliques.into_iter().collect();
        all.iter()
            .filter(|c| {
                !all.iter()
                    .any(|d| d.len() > c.len() && c.iter().all(|x| d.contains(x)))
            })
            .cloned()
            .collect()
    }
}

/// A path on `t` vertices with a private triangle hung on every path
/// vertex and a second triangle on the first one.
///
/// Vertices `0..t` form the path, `t + 2i` and `t + 2i + 1` complete the
/// triangle on path vertex `i`, and `3t`, `3t + 1` the extra triangle on
/// vertex 0. The first path vertex then has three blocks, each containing a
/// vertex that can only leave through a single edge color, so two colors
/// never suffice.
pub fn sharpness_family_interval(t: usize) -> Result<(Graph, IntervalRepresentation)> {
    if t < 2 {
        return Err(Error::arg("sharpness family needs t >= 2"));
    }
    let r = |n: i64, d: i64| Rational::new(n, d);
    let mut intervals = Vec::with_capacity(3 * t + 2);
    for i in 0..t as i64 {
        intervals.push((r(3 * i, 1), r(3 * i + 3, 1)));
    }
    for i in 0..t as i64 {
        intervals.push((r(3 * i + 1, 1), r(3 * i + 2, 1)));
        intervals.push((r(3 * i + 1, 1), r(3 * i + 2, 1)));
    }
    intervals.push((r(1, 4), r(1, 2)));
    intervals.push((r(1, 4), r(1, 2)));
    let rep = IntervalRepresentation::new(intervals)?;
    let g = rep.realize()?;
    Ok((g, rep))
}
