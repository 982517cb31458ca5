//! Exact proper connection numbers by exhaustive coloring search.
//!
//! The search colors edges in edge-id order. In the unconstrained case the
//! color of edge `i` is at most one more than the largest color used on
//! edges `0..i`, which removes the symmetry of permuting colors. After every
//! assignment the partial coloring is checked with a relaxation in which
//! uncolored edges match anything: if some pair has no proper walk even
//! then, no completion can work. Complete colorings are confirmed with a
//! simple-path search.

use serde::{Deserialize, Serialize};

use crate::classes::{hamiltonian_path, HAMILTONIAN_VERTEX_LIMIT};
use crate::coloring::{is_proper_path_coloring, ColorId, EdgeColoring, UNCOLORED};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Limits for exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Search nodes (color assignments) allowed before giving up.
    pub max_nodes: u64,
    /// Optional cap on the number of edges handed to the coloring search.
    pub max_edges: Option<usize>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_edges: None,
        }
    }
}

impl Budget {
    pub fn with_nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            ..Budget::default()
        }
    }
}

/// How the value below `PcResult::value` was excluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Refutation {
    /// Nothing to refute: the value is 0 or 1.
    Trivial,
    /// A counting argument: one color cannot serve a non-complete graph,
    /// and fewer than Δ colors cannot serve a tree.
    Structural,
    /// The search at `value - 1` colors was run to exhaustion.
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PcResult {
    pub value: u32,
    pub certificate: EdgeColoring,
    pub exhausted_below: bool,
    pub refutation: Refutation,
    /// Search nodes spent across all decision searches.
    pub nodes: u64,
}

pub(crate) const MAX_SEARCH_VERTICES: usize = 64;
const NONE: u8 = 0;
const MEMO_CAP: usize = 24;

/// Fast proper-path machinery on graphs with at most 64 vertices.
///
/// Colors are small indices `1..=colors`; 0 is "uncolored", which the walk
/// relaxation treats as compatible with everything.
pub(crate) struct Checker<'g> {
    g: &'g Graph,
    n: usize,
    colors: usize,
    // per-source reach scratch: state (vertex, last) at index vertex*(colors+1)+last
    seen: Vec<bool>,
    queue: Vec<(u8, u8)>,
    memo: Vec<Vec<u64>>,
}

impl<'g> Checker<'g> {
    pub(crate) fn new(g: &'g Graph, colors: usize) -> Self {
        debug_assert!(g.vertex_count() <= MAX_SEARCH_VERTICES);
        let n = g.vertex_count();
        Checker {
            g,
            n,
            colors,
            seen: vec![false; n * (colors + 1)],
            queue: Vec::with_capacity(n * (colors + 1)),
            memo: vec![Vec::new(); n * (colors + 1)],
        }
    }

    /// Vertices reachable from `source` by walks that are proper once
    /// uncolored edges are treated as wildcards.
    fn relaxed_reach(&mut self, assign: &[u8], source: usize) -> u64 {
        let stride = self.colors + 1;
        self.seen.iter_mut().for_each(|s| *s = false);
        self.queue.clear();
        self.seen[source * stride] = true;
        self.queue.push((source as u8, NONE));
        let mut reached = 1u64 << source;
        let mut head = 0;
        while head < self.queue.len() {
            let (x, last) = self.queue[head];
            head += 1;
            for &(y, e) in self.g.incident(x as usize) {
                let c = assign[e];
                if c != NONE && c == last {
                    continue;
                }
                let idx = y * stride + c as usize;
                if !self.seen[idx] {
                    self.seen[idx] = true;
                    reached |= 1 << y;
                    self.queue.push((y as u8, c));
                }
            }
        }
        reached
    }

    fn all_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Necessary condition on a partial coloring: every pair has a relaxed
    /// proper walk.
    pub(crate) fn relaxed_ok(&mut self, assign: &[u8]) -> bool {
        let all = self.all_mask();
        for u in 0..self.n.saturating_sub(1) {
            let higher = all & !((1u64 << (u + 1)) - 1);
            if self.relaxed_reach(assign, u) & higher != higher {
                return false;
            }
        }
        true
    }

    /// Exact check of a complete coloring.
    pub(crate) fn is_proper_path_coloring(&mut self, assign: &[u8]) -> bool {
        debug_assert!(assign.iter().all(|&c| c != NONE));
        if !self.relaxed_ok(assign) {
            return false;
        }
        let all = self.all_mask();
        for u in 0..self.n.saturating_sub(1) {
            let wanted = all & !((1u64 << (u + 1)) - 1);
            self.memo.iter_mut().for_each(Vec::clear);
            let mut reached = 1u64 << u;
            self.dfs(assign, u, NONE, 1u64 << u, &mut reached, wanted);
            if reached & wanted != wanted {
                return false;
            }
        }
        true
    }

    fn dfs(
        &mut self,
        assign: &[u8],
        x: usize,
        last: u8,
        visited: u64,
        reached: &mut u64,
        wanted: u64,
    ) -> bool {
        let stride = self.colors + 1;
        for &(y, e) in self.g.incident(x) {
            let c = assign[e];
            if c == last || visited & (1 << y) != 0 {
                continue;
            }
            *reached |= 1 << y;
            if *reached & wanted == wanted {
                return true;
            }
            let next = visited | (1 << y);
            let key = y * stride + c as usize;
            if self.memo[key].iter().any(|&s| (s | next) == next) {
                continue;
            }
            if self.dfs(assign, y, c, next, reached, wanted) {
                return true;
            }
            if self.memo[key].len() < MEMO_CAP {
                self.memo[key].push(next);
            }
        }
        false
    }
}

/// Exhaustive completion of a partial edge coloring.
pub(crate) struct Completion<'g> {
    g: &'g Graph,
    /// Color ids in use; index `i` is internal color `i + 1`.
    palette: Vec<ColorId>,
    /// Internal colors free edges may take.
    choices: Vec<u8>,
    assign: Vec<u8>,
    free: Vec<usize>,
    canonical: bool,
    checker: Checker<'g>,
    pub(crate) nodes: u64,
    max_nodes: u64,
}

impl<'g> Completion<'g> {
    /// `fixed[e]` is the color of edge `e` or `UNCOLORED`; free edges take
    /// colors from `free_palette`. With `canonical`, free edges use the
    /// first-occurrence ordering of `free_palette` (sound when no fixed
    /// edge uses a color of `free_palette`, so its colors are interchangeable).
    pub(crate) fn new(
        g: &'g Graph,
        fixed: &[ColorId],
        free_palette: &[ColorId],
        canonical: bool,
        budget: &Budget,
    ) -> Result<Self> {
        if g.vertex_count() > MAX_SEARCH_VERTICES {
            return Err(Error::arg(format!(
                "exhaustive search supports at most {MAX_SEARCH_VERTICES} vertices"
            )));
        }
        if let Some(cap) = budget.max_edges {
            if g.edge_count() > cap {
                return Err(Error::arg(format!(
                    "{} edges exceed the configured cap of {cap}",
                    g.edge_count()
                )));
            }
        }
        debug_assert_eq!(fixed.len(), g.edge_count());
        let mut palette: Vec<ColorId> = free_palette.to_vec();
        for &c in fixed {
            if c != UNCOLORED && !palette.contains(&c) {
                palette.push(c);
            }
        }
        if palette.len() > 250 {
            return Err(Error::arg("too many distinct colors for exhaustive search"));
        }
        let index = |c: ColorId| palette.iter().position(|&p| p == c).unwrap() as u8 + 1;
        let assign = fixed
            .iter()
            .map(|&c| if c == UNCOLORED { NONE } else { index(c) })
            .collect();
        let choices = free_palette.iter().map(|&c| index(c)).collect();
        let free = (0..g.edge_count()).filter(|&e| fixed[e] == UNCOLORED).collect();
        let checker = Checker::new(g, palette.len());
        Ok(Completion {
            g,
            palette,
            choices,
            assign,
            free,
            canonical,
            checker,
            nodes: 0,
            max_nodes: budget.max_nodes,
        })
    }

    pub(crate) fn with_spent(mut self, nodes: u64) -> Self {
        self.nodes = nodes;
        self
    }

    pub(crate) fn run(&mut self) -> Result<Option<EdgeColoring>> {
        if self.g.edge_count() == 0 {
            return Ok((self.g.vertex_count() == 1).then(|| EdgeColoring::from_raw(Vec::new())));
        }
        if !self.checker.relaxed_ok(&self.assign) {
            return Ok(None);
        }
        if self.dfs(0, 0)? {
            let colors = self
                .assign
                .iter()
                .map(|&c| self.palette[c as usize - 1])
                .collect();
            Ok(Some(EdgeColoring::from_raw(colors)))
        } else {
            Ok(None)
        }
    }

    fn dfs(&mut self, pos: usize, used: usize) -> Result<bool> {
        if pos == self.free.len() {
            return Ok(self.checker.is_proper_path_coloring(&self.assign));
        }
        let e = self.free[pos];
        let limit = if self.canonical {
            (used + 1).min(self.choices.len())
        } else {
            self.choices.len()
        };
        for i in 0..limit {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(Error::BudgetExceeded {
                    what: "coloring search",
                    explored: self.nodes,
                });
            }
            self.assign[e] = self.choices[i];
            if self.checker.relaxed_ok(&self.assign) && self.dfs(pos + 1, used.max(i + 1))? {
                return Ok(true);
            }
        }
        self.assign[e] = NONE;
        Ok(false)
    }
}

fn decision(g: &Graph, k: u32, budget: &Budget, spent: u64) -> Result<(Option<EdgeColoring>, u64)> {
    let palette: Vec<ColorId> = (1..=k).collect();
    let fixed = vec![UNCOLORED; g.edge_count()];
    let mut search = Completion::new(g, &fixed, &palette, true, budget)?.with_spent(spent);
    let found = search.run()?;
    Ok((found, search.nodes))
}

/// A proper-path coloring with at most `k` colors, if one exists.
pub fn pc_decision(g: &Graph, k: u32, budget: &Budget) -> Result<Option<EdgeColoring>> {
    g.require_connected()?;
    if k == 0 {
        return Err(Error::arg("k must be at least 1"));
    }
    Ok(decision(g, k, budget, 0)?.0)
}

/// The proper connection number of a connected graph, with a certificate.
///
/// The single-vertex graph has no edges and no pairs; its value is 0.
pub fn pc_exact(g: &Graph, budget: &Budget) -> Result<PcResult> {
    g.require_connected()?;
    if g.vertex_count() == 1 {
        return Ok(PcResult {
            value: 0,
            certificate: EdgeColoring::from_raw(Vec::new()),
            exhausted_below: true,
            refutation: Refutation::Trivial,
            nodes: 0,
        });
    }
    if g.is_complete() {
        return Ok(PcResult {
            value: 1,
            certificate: EdgeColoring::uniform(g, 1),
            exhausted_below: true,
            refutation: Refutation::Trivial,
            nodes: 0,
        });
    }
    let lower = if g.is_tree() {
        g.max_degree() as u32
    } else {
        2
    };
    let (upper, hint) = upper_bound(g)?;
    let mut nodes = 0;
    for k in lower..upper {
        let (found, spent) = decision(g, k, budget, nodes)?;
        nodes = spent;
        if let Some(certificate) = found {
            return Ok(PcResult {
                value: k,
                certificate,
                exhausted_below: true,
                refutation: if k == lower { Refutation::Structural } else { Refutation::Search },
                nodes,
            });
        }
    }
    Ok(PcResult {
        value: upper,
        certificate: hint,
        exhausted_below: true,
        refutation: if upper == lower { Refutation::Structural } else { Refutation::Search },
        nodes,
    })
}

/// A verified coloring of a connected non-complete graph: alternating
/// colors on a Hamiltonian path when one exists, otherwise a proper edge
/// coloring of a low-degree spanning tree. Unused edges get color 1.
fn upper_bound(g: &Graph) -> Result<(u32, EdgeColoring)> {
    let mut colors = vec![1; g.edge_count()];
    let path = if g.vertex_count() <= HAMILTONIAN_VERTEX_LIMIT {
        hamiltonian_path(g)?
    } else {
        None
    };
    let value = if let Some(path) = path {
        for (i, w) in path.windows(2).enumerate() {
            colors[g.edge_id(w[0], w[1]).unwrap()] = 1 + (i % 2) as ColorId;
        }
        2
    } else {
        let (tree, delta) = spanning_tree_upper_bound(g)?;
        for (e, c) in tree_edge_coloring(&tree).into_iter().enumerate() {
            let (u, v) = tree.edges()[e];
            colors[g.edge_id(u, v).unwrap()] = c;
        }
        delta as u32
    };
    let coloring = EdgeColoring::from_raw(colors);
    if !is_proper_path_coloring(g, &coloring)?.is_pass() {
        return Err(Error::arg("internal: upper-bound coloring failed verification"));
    }
    Ok((value, coloring))
}

/// A proper edge coloring of a tree with colors `1..=Δ`, grown from a
/// maximum-degree vertex.
pub(crate) fn tree_edge_coloring(t: &Graph) -> Vec<ColorId> {
    let delta = t.max_degree() as ColorId;
    let mut colors = vec![UNCOLORED; t.edge_count()];
    let Some(root) = t.vertices().max_by_key(|&v| (t.degree(v), std::cmp::Reverse(v))) else {
        return colors;
    };
    let mut stack = vec![(root, usize::MAX, UNCOLORED)];
    while let Some((v, parent, up)) = stack.pop() {
        let mut next = (1..=delta).filter(|&c| c != up);
        for &(w, e) in t.incident(v) {
            if w != parent {
                let c = next.next().expect("degree at most Δ");
                colors[e] = c;
                stack.push((w, v, c));
            }
        }
    }
    colors
}

/// A spanning tree with small maximum degree; its maximum degree bounds
/// `pc(g)` from above.
///
/// Starts from a depth-first tree and repeatedly swaps in a non-tree edge
/// `{a, b}` whose endpoints have slack, removing a tree edge at a
/// maximum-degree vertex on the `a`-`b` tree path.
pub fn spanning_tree_upper_bound(g: &Graph) -> Result<(Graph, usize)> {
    g.require_connected()?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut in_tree = vec![false; m];
    let mut seen = vec![false; n];
    let mut stack = vec![(0usize, 0usize)];
    seen[0] = true;
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        let inc = g.incident(v);
        if *i == inc.len() {
            stack.pop();
            continue;
        }
        let (w, e) = inc[*i];
        *i += 1;
        if !seen[w] {
            seen[w] = true;
            in_tree[e] = true;
            stack.push((w, 0));
        }
    }

    let mut degree = vec![0usize; n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if in_tree[e] {
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    // each successful swap strictly decreases the number of vertices at
    // maximum degree, or the maximum degree itself
    for _ in 0..n * m + 1 {
        let max = *degree.iter().max().unwrap_or(&0);
        if max <= 2 {
            break;
        }
        let mut improved = false;
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if in_tree[e] || degree[a] + 2 > max || degree[b] + 2 > max {
                continue;
            }
            let path = tree_path(g, &in_tree, a, b);
            let hub = path[1..path.len() - 1]
                .iter()
                .position(|&w| degree[w] == max)
                .map(|i| i + 1);
            if let Some(i) = hub {
                let removed = g.edge_id(path[i], path[i + 1]).unwrap();
                in_tree[removed] = false;
                degree[path[i]] -= 1;
                degree[path[i + 1]] -= 1;
                in_tree[e] = true;
                degree[a] += 1;
                degree[b] += 1;
                improved = true;
                break;
            }
        }
        if !improved {
            break;
        }
    }
    let tree = g.spanning_subgraph((0..m).filter(|&e| in_tree[e]));
    let bound = tree.max_degree();
    Ok((tree, bound))
}

fn tree_path(g: &Graph, in_tree: &[bool], from: VertexId, to: VertexId) -> Vec<VertexId> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[from] = from;
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        if v == to {
            break;
        }
        for &(w, e) in g.incident(v) {
            if in_tree[e] && parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut path = vec![to];
    let mut v = to;
    while v != from {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Verdict;

    fn pc(g: &Graph) -> u32 {
        pc_exact(g, &Budget::default()).unwrap().value
    }

    #[test]
    fn decision_examples() {
        let k4 = Graph::complete(4);
        let c = pc_decision(&k4, 1, &Budget::default()).unwrap().unwrap();
        assert_eq!(c, EdgeColoring::uniform(&k4, 1));
        assert!(pc_decision(&Graph::star(3), 2, &Budget::default())
            .unwrap()
            .is_none());
        let c5 = Graph::cycle(5);
        let c = pc_decision(&c5, 2, &Budget::default()).unwrap().unwrap();
        assert_eq!(is_proper_path_coloring(&c5, &c).unwrap(), Verdict::Pass);
        assert!(c.color_count() <= 2);
    }

    #[test]
    fn exact_examples() {
        assert_eq!(pc(&Graph::path(6)), 2);
        let spider = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(pc(&spider), 3);
        assert_eq!(pc(&Graph::complete(5)), 1);
        assert_eq!(pc(&Graph::complete(1)), 0);
        assert_eq!(pc(&Graph::complete(2)), 1);
    }

    #[test]
    fn certificate_uses_exactly_value_colors() {
        for g in [Graph::petersen(), Graph::star(4), Graph::cycle(7)] {
            let r = pc_exact(&g, &Budget::default()).unwrap();
            assert_eq!(r.certificate.color_count() as u32, r.value);
            assert!(is_proper_path_coloring(&g, &r.certificate).unwrap().is_pass());
        }
    }

    #[test]
    fn disconnected_and_budget_errors() {
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(pc_exact(&two, &Budget::default()), Err(Error::Disconnected));
        // windmill of three triangles needs three colors; a tiny budget cannot refute two
        let windmill = Graph::new(
            7,
            [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)],
        )
        .unwrap();
        assert!(matches!(
            pc_exact(&windmill, &Budget::with_nodes(5)),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(pc(&windmill), 3);
        let capped = Budget {
            max_edges: Some(3),
            ..Budget::default()
        };
        assert!(pc_exact(&windmill, &capped).is_err());
    }

    #[test]
    fn refutation_kinds() {
        let r = pc_exact(&Graph::star(4), &Budget::default()).unwrap();
        assert_eq!(r.refutation, Refutation::Structural);
        let windmill = Graph::new(
            7,
            [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)],
        )
        .unwrap();
        let r = pc_exact(&windmill, &Budget::default()).unwrap();
        assert_eq!(r.refutation, Refutation::Search);
        assert!(r.exhausted_below);
    }

    #[test]
    fn spanning_tree_bounds() {
        let (t, b) = spanning_tree_upper_bound(&Graph::path(5)).unwrap();
        assert_eq!((t, b), (Graph::path(5), 2));
        let (t, b) = spanning_tree_upper_bound(&Graph::cycle(6)).unwrap();
        assert_eq!(b, 2);
        assert!(t.is_tree());
        assert_eq!(spanning_tree_upper_bound(&Graph::star(4)).unwrap().1, 4);
        let (t, b) = spanning_tree_upper_bound(&Graph::petersen()).unwrap();
        assert!(Graph::petersen().is_spanning_connected_subgraph(&t).unwrap());
        assert!(t.is_tree());
        assert!(b <= 3);
        // complete graphs always admit a Hamiltonian path
        assert_eq!(spanning_tree_upper_bound(&Graph::complete(6)).unwrap().1, 2);
    }
}
