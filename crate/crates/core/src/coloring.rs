//! Edge colorings and proper-path connectivity.
//!
//! A path is proper when consecutive edges carry different colors. Deciding
//! whether a proper `u`-`v` path exists is done in two stages: a
//! breadth-first search over (vertex, last edge) states decides whether a
//! proper *walk* exists, and a depth-first search over simple paths confirms
//! it. The walk search can only over-approximate, so it is used to reject
//! pairs early; the simple-path search is the one that answers.

use std::collections::{BTreeSet, HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Colors are positive; 0 marks an uncolored edge inside solvers.
pub type ColorId = u32;

pub const UNCOLORED: ColorId = 0;

/// A total map from the edges of a host graph to positive color ids,
/// indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    colors: Vec<ColorId>,
}

impl EdgeColoring {
    pub fn new(g: &Graph, colors: Vec<ColorId>) -> Result<Self> {
        if colors.len() != g.edge_count() {
            return Err(Error::arg(format!(
                "coloring has {} entries but the graph has {} edges",
                colors.len(),
                g.edge_count()
            )));
        }
        if let Some(e) = colors.iter().position(|&c| c == UNCOLORED) {
            return Err(Error::arg(format!("edge {e} is uncolored")));
        }
        Ok(EdgeColoring { colors })
    }

    pub fn uniform(g: &Graph, color: ColorId) -> Self {
        assert_ne!(color, UNCOLORED);
        EdgeColoring {
            colors: vec![color; g.edge_count()],
        }
    }

    /// Every edge gets its own color.
    pub fn rainbow(g: &Graph) -> Self {
        EdgeColoring {
            colors: (1..=g.edge_count() as ColorId).collect(),
        }
    }

    /// Builds a coloring from `(u, v, color)` triples; every edge must be listed once.
    pub fn from_triples(g: &Graph, triples: &[(VertexId, VertexId, ColorId)]) -> Result<Self> {
        let mut colors = vec![UNCOLORED; g.edge_count()];
        for &(u, v, c) in triples {
            let e = g
                .edge_id(u, v)
                .ok_or_else(|| Error::arg(format!("{{{u},{v}}} is not an edge")))?;
            if colors[e] != UNCOLORED {
                return Err(Error::arg(format!("edge {{{u},{v}}} colored twice")));
            }
            colors[e] = c;
        }
        Self::new(g, colors)
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, edge: usize) -> ColorId {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[ColorId] {
        &self.colors
    }

    pub fn color_of(&self, g: &Graph, u: VertexId, v: VertexId) -> Option<ColorId> {
        g.edge_id(u, v).map(|e| self.colors[e])
    }

    pub fn palette(&self) -> BTreeSet<ColorId> {
        self.colors.iter().copied().collect()
    }

    pub fn color_count(&self) -> usize {
        self.palette().len()
    }

    /// Renumbers colors to `1..=color_count` preserving their relative order.
    pub fn compacted(&self) -> EdgeColoring {
        let palette: Vec<_> = self.palette().into_iter().collect();
        EdgeColoring {
            colors: self
                .colors
                .iter()
                .map(|c| palette.binary_search(c).unwrap() as ColorId + 1)
                .collect(),
        }
    }

    pub(crate) fn from_raw(colors: Vec<ColorId>) -> Self {
        debug_assert!(colors.iter().all(|&c| c != UNCOLORED));
        EdgeColoring { colors }
    }

    fn check_host(&self, g: &Graph) -> Result<()> {
        if self.colors.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::arg(format!(
                "coloring covers {} edges but the graph has {}",
                self.colors.len(),
                g.edge_count()
            )))
        }
    }
}

/// A proper path together with the colors along it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPath {
    pub vertices: Vec<VertexId>,
    pub colors: Vec<ColorId>,
}

impl WitnessPath {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

/// Outcome of checking a whole coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    /// The lexicographically first pair `(u, v)`, `u < v`, with no proper path.
    Fail(VertexId, VertexId),
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

/// Whether `p` is a path of `g` (distinct vertices, consecutive ones
/// adjacent) on which no two consecutive edges share a color.
pub fn is_proper_path(g: &Graph, c: &EdgeColoring, p: &[VertexId]) -> Result<bool> {
    c.check_host(g)?;
    for &v in p {
        g.check_vertex(v)?;
    }
    let mut seen = FixedBitSet::with_capacity(g.vertex_count());
    for &v in p {
        if seen.put(v) {
            return Ok(false);
        }
    }
    let mut last = UNCOLORED;
    for w in p.windows(2) {
        let Some(e) = g.edge_id(w[0], w[1]) else {
            return Ok(false);
        };
        let color = c.color(e);
        if color == last {
            return Ok(false);
        }
        last = color;
    }
    Ok(true)
}

/// Search state for the walk pre-filter: the arc `(from -> to)` last used,
/// numbered `2*edge + direction`, plus one colorless start state.
struct WalkReach {
    reached: FixedBitSet,
}

impl WalkReach {
    fn from_source(g: &Graph, c: &EdgeColoring, source: VertexId) -> Self {
        let arcs = 2 * g.edge_count();
        let mut seen_arc = FixedBitSet::with_capacity(arcs);
        let mut reached = FixedBitSet::with_capacity(g.vertex_count());
        reached.insert(source);
        let mut queue = VecDeque::new();
        for &(w, e) in g.incident(source) {
            let arc = arc_id(g, e, source);
            seen_arc.insert(arc);
            reached.insert(w);
            queue.push_back((w, c.color(e)));
        }
        while let Some((x, last)) = queue.pop_front() {
            for &(y, e) in g.incident(x) {
                let color = c.color(e);
                if color == last {
                    continue;
                }
                let arc = arc_id(g, e, x);
                if !seen_arc.put(arc) {
                    reached.insert(y);
                    queue.push_back((y, color));
                }
            }
        }
        WalkReach { reached }
    }
}

fn arc_id(g: &Graph, edge: usize, from: VertexId) -> usize {
    2 * edge + usize::from(g.edges()[edge].0 != from)
}

const MEMO_CAP: usize = 32;

/// Depth-first search over simple proper paths from one source.
///
/// Completed states are remembered per (vertex, last color) together with
/// the visited set; a later arrival at the same vertex and color whose
/// visited set is a superset can reach nothing new and is skipped.
struct SimplePathSearch<'a> {
    g: &'a Graph,
    c: &'a EdgeColoring,
    visited: FixedBitSet,
    stack: Vec<VertexId>,
    done: HashMap<(VertexId, ColorId), Vec<FixedBitSet>>,
}

impl<'a> SimplePathSearch<'a> {
    fn new(g: &'a Graph, c: &'a EdgeColoring) -> Self {
        SimplePathSearch {
            g,
            c,
            visited: FixedBitSet::with_capacity(g.vertex_count()),
            stack: Vec::new(),
            done: HashMap::new(),
        }
    }

    fn dominated(&self, x: VertexId, last: ColorId) -> bool {
        self.done
            .get(&(x, last))
            .is_some_and(|sets| sets.iter().any(|s| s.is_subset(&self.visited)))
    }

    fn record(&mut self, x: VertexId, last: ColorId) {
        let entry = self.done.entry((x, last)).or_default();
        if entry.len() < MEMO_CAP {
            entry.push(self.visited.clone());
        }
    }

    /// Path to `target`, as a vertex sequence, if one exists.
    fn find(&mut self, source: VertexId, target: VertexId) -> Option<Vec<VertexId>> {
        self.visited.clear();
        self.done.clear();
        self.stack.clear();
        self.visited.insert(source);
        self.stack.push(source);
        if self.dfs_target(source, UNCOLORED, target) {
            Some(self.stack.clone())
        } else {
            None
        }
    }

    fn dfs_target(&mut self, x: VertexId, last: ColorId, target: VertexId) -> bool {
        for &(y, e) in self.g.incident(x) {
            let color = self.c.color(e);
            if color == last || self.visited.contains(y) {
                continue;
            }
            self.stack.push(y);
            if y == target {
                return true;
            }
            self.visited.insert(y);
            if !self.dominated(y, color) {
                if self.dfs_target(y, color, target) {
                    return true;
                }
                self.record(y, color);
            }
            self.visited.set(y, false);
            self.stack.pop();
        }
        false
    }

    /// Every vertex reachable from `source` by a proper simple path.
    /// Stops early once all of `wanted` is reached.
    fn reach_all(&mut self, source: VertexId, wanted: &FixedBitSet) -> FixedBitSet {
        self.visited.clear();
        self.done.clear();
        let mut reached = FixedBitSet::with_capacity(self.g.vertex_count());
        reached.insert(source);
        self.visited.insert(source);
        self.dfs_all(source, UNCOLORED, &mut reached, wanted);
        reached
    }

    fn dfs_all(
        &mut self,
        x: VertexId,
        last: ColorId,
        reached: &mut FixedBitSet,
        wanted: &FixedBitSet,
    ) -> bool {
        for &(y, e) in self.g.incident(x) {
            let color = self.c.color(e);
            if color == last || self.visited.contains(y) {
                continue;
            }
            reached.insert(y);
            if wanted.is_subset(reached) {
                return true;
            }
            self.visited.insert(y);
            if !self.dominated(y, color) {
                if self.dfs_all(y, color, reached, wanted) {
                    return true;
                }
                self.record(y, color);
            }
            self.visited.set(y, false);
        }
        false
    }
}

/// A proper simple `u`-`v` path, if one exists.
pub fn find_proper_path(
    g: &Graph,
    c: &EdgeColoring,
    u: VertexId,
    v: VertexId,
) -> Result<Option<WitnessPath>> {
    c.check_host(g)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::arg("endpoints must be distinct"));
    }
    if !WalkReach::from_source(g, c, u).reached.contains(v) {
        return Ok(None);
    }
    let found = SimplePathSearch::new(g, c).find(u, v);
    Ok(found.map(|vertices| {
        let colors = vertices
            .windows(2)
            .map(|w| c.color(g.edge_id(w[0], w[1]).expect("consecutive vertices adjacent")))
            .collect();
        WitnessPath { vertices, colors }
    }))
}

/// Whether a proper walk (repeated vertices allowed) joins `u` and `v`.
pub fn has_proper_walk(g: &Graph, c: &EdgeColoring, u: VertexId, v: VertexId) -> Result<bool> {
    c.check_host(g)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(WalkReach::from_source(g, c, u).reached.contains(v))
}

/// Checks that every pair of distinct vertices is joined by a proper path.
pub fn is_proper_path_coloring(g: &Graph, c: &EdgeColoring) -> Result<Verdict> {
    c.check_host(g)?;
    g.require_connected()?;
    let n = g.vertex_count();
    let mut search = SimplePathSearch::new(g, c);
    for u in 0..n.saturating_sub(1) {
        let mut wanted = FixedBitSet::with_capacity(n);
        wanted.insert_range(u + 1..n);
        let walk = WalkReach::from_source(g, c, u).reached;
        if let Some(v) = wanted.difference(&walk).next() {
            return Ok(Verdict::Fail(u, v));
        }
        let reached = search.reach_all(u, &wanted);
        if let Some(v) = wanted.difference(&reached).next() {
            return Ok(Verdict::Fail(u, v));
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coloring(g: &Graph, colors: &[ColorId]) -> EdgeColoring {
        EdgeColoring::new(g, colors.to_vec()).unwrap()
    }

    #[test]
    fn proper_path_checks() {
        let p3 = Graph::path(3);
        assert!(is_proper_path(&p3, &coloring(&p3, &[1, 2]), &[0, 1, 2]).unwrap());
        assert!(!is_proper_path(&p3, &coloring(&p3, &[1, 1]), &[0, 1, 2]).unwrap());
        assert!(is_proper_path(&p3, &coloring(&p3, &[1, 1]), &[0, 1]).unwrap());
        assert!(is_proper_path(&p3, &coloring(&p3, &[1, 1]), &[2]).unwrap());
        // repeated vertex, missing edge
        assert!(!is_proper_path(&p3, &coloring(&p3, &[1, 2]), &[0, 1, 0]).unwrap());
        assert!(!is_proper_path(&p3, &coloring(&p3, &[1, 2]), &[0, 2]).unwrap());
        assert!(is_proper_path(&p3, &coloring(&p3, &[1, 2]), &[0, 3]).is_err());
    }

    #[test]
    fn find_paths() {
        let k3 = Graph::complete(3);
        let mono = EdgeColoring::uniform(&k3, 1);
        let w = find_proper_path(&k3, &mono, 0, 2).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 2]);

        let p3 = Graph::path(3);
        assert!(find_proper_path(&p3, &coloring(&p3, &[1, 1]), 0, 2)
            .unwrap()
            .is_none());
        assert!(find_proper_path(&p3, &coloring(&p3, &[1, 1]), 1, 1).is_err());
    }

    #[test]
    fn c4_colorings() {
        let c4 = Graph::cycle(4);
        // 1,1,2,2 in cycle order: both 0-2 paths are monochromatic pairs
        let blocked =
            EdgeColoring::from_triples(&c4, &[(0, 1, 1), (1, 2, 1), (2, 3, 2), (3, 0, 2)])
                .unwrap();
        assert!(find_proper_path(&c4, &blocked, 0, 2).unwrap().is_none());
        assert!(find_proper_path(&c4, &blocked, 1, 3).unwrap().is_some());
        assert_eq!(is_proper_path_coloring(&c4, &blocked).unwrap(), Verdict::Fail(0, 2));

        let alternating =
            EdgeColoring::from_triples(&c4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 2)])
                .unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                let w = find_proper_path(&c4, &alternating, u, v)
                    .unwrap()
                    .expect("pair connected");
                assert!(is_proper_path(&c4, &alternating, &w.vertices).unwrap());
                assert_eq!(w.vertices.first(), Some(&u));
                assert_eq!(w.vertices.last(), Some(&v));
            }
        }
    }

    #[test]
    fn walk_without_path() {
        // u=0 - x=1 - v=2 both color 1, triangle 1-3-4 on x lets a walk escape
        let g = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4), (1, 4)]).unwrap();
        let c = EdgeColoring::from_triples(
            &g,
            &[(0, 1, 1), (1, 2, 1), (1, 3, 2), (3, 4, 1), (1, 4, 2)],
        )
        .unwrap();
        assert!(has_proper_walk(&g, &c, 0, 2).unwrap());
        assert!(find_proper_path(&g, &c, 0, 2).unwrap().is_none());
        assert_eq!(is_proper_path_coloring(&g, &c).unwrap(), Verdict::Fail(0, 2));
    }

    #[test]
    fn whole_coloring_verdicts() {
        let p5 = Graph::path(5);
        assert!(is_proper_path_coloring(&p5, &coloring(&p5, &[1, 2, 1, 2]))
            .unwrap()
            .is_pass());
        let star = Graph::star(3);
        assert_eq!(
            is_proper_path_coloring(&star, &coloring(&star, &[1, 1, 2])).unwrap(),
            Verdict::Fail(1, 2)
        );
        let petersen = Graph::petersen();
        assert!(is_proper_path_coloring(&petersen, &EdgeColoring::rainbow(&petersen))
            .unwrap()
            .is_pass());
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            is_proper_path_coloring(&two, &EdgeColoring::uniform(&two, 1)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn coloring_validation() {
        let p3 = Graph::path(3);
        assert!(EdgeColoring::new(&p3, vec![1]).is_err());
        assert!(EdgeColoring::new(&p3, vec![1, 0]).is_err());
        let c = coloring(&p3, &[7, 3]);
        assert_eq!(c.color_count(), 2);
        assert_eq!(c.compacted().colors(), &[2, 1]);
        assert!(EdgeColoring::from_triples(&p3, &[(0, 1, 1)]).is_err());
        assert!(EdgeColoring::from_triples(&p3, &[(0, 2, 1), (1, 2, 1)]).is_err());
    }
}
