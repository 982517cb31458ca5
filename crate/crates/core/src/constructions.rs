//! Colorings built from dominating structure.
//!
//! Every operation first builds a coloring directly from the structure it
//! is given. If that coloring fails verification, a search restricted to
//! the same shape (the dominating part keeps its coloring, every other
//! edge gets color 1 or 2) is tried, and after that an unrestricted search
//! at the guaranteed number of colors. If even that search comes back
//! empty, the exact value is computed and returned; the outcome then
//! exceeds its guarantee and [`ConstructionOutcome::meets_guarantee`]
//! reports it.

use serde::{Deserialize, Serialize};

use crate::classes::{ArcRepresentation, IntervalRepresentation};
use crate::coloring::{is_proper_path_coloring, ColorId, EdgeColoring, Verdict, UNCOLORED};
use crate::domination::{classify, DominationCertificate, DominationKind};
use crate::error::{Error, Result};
use crate::exact::{pc_decision, pc_exact, tree_edge_coloring, Budget, Completion};
use crate::graph::{Distance, Graph, VertexId, VertexSet};

/// Node cap for the shape-restricted search.
const STRUCTURED_NODES: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Direct,
    StructuredSearch,
    FallbackSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionOutcome {
    pub coloring: EdgeColoring,
    pub colors_used: usize,
    pub guarantee: u32,
    pub method: Method,
    pub verified: bool,
}

impl ConstructionOutcome {
    pub fn meets_guarantee(&self) -> bool {
        self.colors_used <= self.guarantee as usize
    }
}

fn verifies(g: &Graph, colors: &[ColorId], guarantee: u32) -> Result<Option<EdgeColoring>> {
    let c = EdgeColoring::new(g, colors.to_vec())?;
    if c.color_count() > guarantee as usize {
        return Ok(None);
    }
    Ok(is_proper_path_coloring(g, &c)?.is_pass().then_some(c))
}

fn outcome(g: &Graph, coloring: EdgeColoring, guarantee: u32, method: Method) -> Result<ConstructionOutcome> {
    if is_proper_path_coloring(g, &coloring)? != Verdict::Pass {
        return Err(Error::arg("internal: produced coloring failed verification"));
    }
    Ok(ConstructionOutcome {
        colors_used: coloring.color_count(),
        coloring,
        guarantee,
        method,
        verified: true,
    })
}

/// Verifies `direct`, then falls back as described in the module docs.
/// `fixed` holds the colors of the dominating part (others `UNCOLORED`).
fn settle(
    g: &Graph,
    direct: &[ColorId],
    fixed: Option<&[ColorId]>,
    guarantee: u32,
    budget: &Budget,
) -> Result<ConstructionOutcome> {
    if let Some(c) = verifies(g, direct, guarantee)? {
        return outcome(g, c, guarantee, Method::Direct);
    }
    if let Some(fixed) = fixed {
        let structured = Budget {
            max_nodes: budget.max_nodes.min(STRUCTURED_NODES),
            ..*budget
        };
        // fixed colors are all >= 3, so 1 and 2 are interchangeable
        match Completion::new(g, fixed, &[1, 2], true, &structured).and_then(|mut s| s.run()) {
            Ok(Some(c)) => return outcome(g, c, guarantee, Method::StructuredSearch),
            Ok(None) | Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    if let Some(c) = pc_decision(g, guarantee, budget)? {
        return outcome(g, c, guarantee, Method::FallbackSearch);
    }
    let exact = pc_exact(g, budget)?;
    outcome(g, exact.certificate, guarantee, Method::FallbackSearch)
}

fn fill(colors: &mut [ColorId]) {
    for c in colors.iter_mut().filter(|c| **c == UNCOLORED) {
        *c = 1;
    }
}

fn set_if_free(colors: &mut [ColorId], g: &Graph, u: VertexId, v: VertexId, c: ColorId) {
    let e = g.edge_id(u, v).expect("edge exists");
    if colors[e] == UNCOLORED {
        colors[e] = c;
    }
}

fn set(colors: &mut [ColorId], g: &Graph, u: VertexId, v: VertexId, c: ColorId) {
    colors[g.edge_id(u, v).expect("edge exists")] = c;
}

/// An optimal coloring of `G[D]` shifted onto colors `3..`, laid out on the
/// edges of `g`, together with `pc(G[D])`.
fn dominating_core(g: &Graph, d: &VertexSet, budget: &Budget) -> Result<(Vec<ColorId>, u32)> {
    let (sub, ids) = g.induced_subgraph(d)?;
    let pc = pc_exact(&sub, budget)?;
    let mut colors = vec![UNCOLORED; g.edge_count()];
    for (e, &(a, b)) in sub.edges().iter().enumerate() {
        set(&mut colors, g, ids[a], ids[b], pc.certificate.color(e) + 2);
    }
    Ok((colors, pc.value))
}

fn certified(g: &Graph, d: &DominationCertificate, kind: DominationKind) -> Result<VertexSet> {
    let set = VertexSet::from_ids(g.vertex_count(), d.set.iter().copied())?;
    if set.is_empty() || !classify(g, &set)?.satisfies(kind) {
        return Err(Error::arg(format!(
            "set {:?} is not a connected {} dominating set",
            d.set,
            match kind {
                DominationKind::TwoWay => "two-way",
                DominationKind::TwoWayTwoStep => "two-way two-step",
            }
        )));
    }
    Ok(set)
}

fn trivial_outcome(g: &Graph, guarantee: u32) -> Option<ConstructionOutcome> {
    if g.vertex_count() == 1 {
        return Some(ConstructionOutcome {
            coloring: EdgeColoring::new(g, Vec::new()).expect("no edges"),
            colors_used: 0,
            guarantee,
            method: Method::Direct,
            verified: true,
        });
    }
    g.is_complete().then(|| ConstructionOutcome {
        coloring: EdgeColoring::uniform(g, 1),
        colors_used: 1,
        guarantee,
        method: Method::Direct,
        verified: true,
    })
}

/// Colors the foot edges of vertices outside `d` that are adjacent to it:
/// with two or more feet, two foot edges get color 1; vertices with a
/// single foot alternate 1 and 2 per foot and leave along an edge whose
/// color differs from the neighbor's own foot edge.
fn color_first_layer(g: &Graph, d: &VertexSet, layer: &[VertexId], colors: &mut [ColorId]) {
    let n = g.vertex_count();
    let feet = |x: VertexId| g.neighbors(x).filter(|&w| d.contains(w)).collect::<Vec<_>>();
    let mut rank = vec![0usize; n];
    let mut single = Vec::new();
    for &x in layer {
        match feet(x)[..] {
            [v] => {
                set(colors, g, x, v, 1 + (rank[v] % 2) as ColorId);
                rank[v] += 1;
                single.push(x);
            }
            [a, b, ..] => {
                set_if_free(colors, g, x, a, 1);
                set_if_free(colors, g, x, b, 1);
            }
            [] => {}
        }
    }
    for x in single {
        let in_layer = |w: VertexId| layer.contains(&w);
        let escape = g
            .neighbors(x)
            .filter(|&w| !d.contains(w))
            .min_by_key(|&w| (!in_layer(w), w));
        if let Some(y) = escape {
            let foot_color = feet(y)
                .first()
                .map(|&f| colors[g.edge_id(y, f).unwrap()])
                .unwrap_or(UNCOLORED);
            let c = if foot_color == 1 { 2 } else { 1 };
            set_if_free(colors, g, x, y, c);
        }
    }
}

/// A coloring with at most `pc(G[D]) + 2` colors from a connected two-way
/// two-step dominating set.
pub fn color_from_two_step_dominating(
    g: &Graph,
    d: &DominationCertificate,
    budget: &Budget,
) -> Result<ConstructionOutcome> {
    let dset = certified(g, d, DominationKind::TwoWayTwoStep)?;
    let (mut colors, k) = dominating_core(g, &dset, budget)?;
    let guarantee = k + 2;
    if let Some(t) = trivial_outcome(g, guarantee) {
        return Ok(t);
    }
    let fixed = colors.clone();
    let dist = g.distances_to_set(&dset)?;
    let layer = |i: usize| -> Vec<VertexId> {
        g.vertices().filter(|&v| dist[v] == Distance::Finite(i)).collect()
    };
    let (n1, n2) = (layer(1), layer(2));
    color_first_layer(g, &dset, &n1, &mut colors);

    // each second-layer vertex x gets two escapes x-u-v into D whose
    // first edges carry 1 and 2 and whose foot edges differ from them
    let foot_edge = |u: VertexId| {
        g.neighbors(u)
            .find(|&w| dset.contains(w))
            .map(|f| (f, g.edge_id(u, f).unwrap()))
            .expect("first-layer vertex has a foot")
    };
    let mut claimed = vec![false; g.edge_count()];
    for &x in &n2 {
        let ups: Vec<VertexId> = g.neighbors(x).filter(|&w| dist[w] == Distance::Finite(1)).collect();
        let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
        for (i, &a) in ups.iter().enumerate() {
            for &b in &ups[i + 1..] {
                pairs.push((a, b));
            }
        }
        pairs.sort_by_key(|&(a, b)| foot_edge(a).0 == foot_edge(b).0);
        let fits = |u: VertexId, c: ColorId, colors: &[ColorId], claimed: &[bool]| {
            let (_, e) = foot_edge(u);
            !claimed[e] || colors[e] != c
        };
        let choice = pairs.iter().find_map(|&(a, b)| {
            [(1, 2), (2, 1)]
                .into_iter()
                .find(|&(ca, cb)| fits(a, ca, &colors, &claimed) && fits(b, cb, &colors, &claimed))
                .map(|(ca, cb)| (a, b, ca, cb))
        });
        let Some((a, b, ca, cb)) = choice.or_else(|| pairs.first().map(|&(a, b)| (a, b, 1, 2)))
        else {
            continue;
        };
        for (u, c) in [(a, ca), (b, cb)] {
            set(&mut colors, g, x, u, c);
            let (_, e) = foot_edge(u);
            if !claimed[e] {
                colors[e] = 3 - c;
                claimed[e] = true;
            }
        }
    }
    fill(&mut colors);
    settle(g, &colors, Some(&fixed), guarantee, budget)
}

/// A coloring with at most `pc(G[D]) + 2` colors from a connected two-way
/// dominating set.
pub fn color_from_dominating(
    g: &Graph,
    d: &DominationCertificate,
    budget: &Budget,
) -> Result<ConstructionOutcome> {
    let dset = certified(g, d, DominationKind::TwoWay)?;
    let (mut colors, k) = dominating_core(g, &dset, budget)?;
    let guarantee = k + 2;
    if let Some(t) = trivial_outcome(g, guarantee) {
        return Ok(t);
    }
    let fixed = colors.clone();
    let outside: Vec<VertexId> = g.vertices().filter(|&v| !dset.contains(v)).collect();
    color_first_layer(g, &dset, &outside, &mut colors);
    fill(&mut colors);
    settle(g, &colors, Some(&fixed), guarantee, budget)
}

/// A proper edge coloring of a tree with `Δ` colors.
pub fn color_tree(t: &Graph) -> Result<ConstructionOutcome> {
    if !t.is_tree() {
        return Err(Error::arg("graph is not a tree"));
    }
    if t.vertex_count() < 2 {
        return Err(Error::arg("tree needs at least two vertices"));
    }
    let delta = t.max_degree() as ColorId;
    let colors = tree_edge_coloring(t);
    settle(t, &colors, None, delta, &Budget::default())
}

/// Colors a Hamiltonian path alternately 1, 2 and everything else 1.
pub fn color_traceable(g: &Graph, ham_path: &[VertexId]) -> Result<ConstructionOutcome> {
    let n = g.vertex_count();
    let mut seen = VertexSet::empty(n);
    for &v in ham_path {
        g.check_vertex(v)?;
        seen.insert(v);
    }
    if ham_path.len() != n || seen.len() != n || !ham_path.windows(2).all(|w| g.has_edge(w[0], w[1])) {
        return Err(Error::arg("sequence is not a Hamiltonian path"));
    }
    if g.is_complete() {
        return Err(Error::arg("graph is complete; one color suffices"));
    }
    let mut colors = vec![UNCOLORED; g.edge_count()];
    for (i, w) in ham_path.windows(2).enumerate() {
        set(&mut colors, g, w[0], w[1], 1 + (i % 2) as ColorId);
    }
    fill(&mut colors);
    settle(g, &colors, None, 2, &Budget::default())
}

fn require_class_instance(g: &Graph, realized: &Graph) -> Result<()> {
    if realized != g {
        return Err(Error::arg("representation does not realize the graph"));
    }
    g.require_connected()?;
    if g.is_complete() {
        return Err(Error::arg("graph is complete; one color suffices"));
    }
    if g.min_degree() < 2 {
        return Err(Error::arg("minimum degree must be at least 2"));
    }
    Ok(())
}

/// Colors the cliques hanging off a dominating path or cycle.
///
/// Every vertex off the spine is assigned to its first spine neighbor.
/// In each clique `Q` at root `v`, with `u` its smallest vertex, `uv`
/// gets 3, `ux` gets 2 and `xv` gets 1 for the other `x ∈ Q`. Every
/// clique vertex then reaches `v` ending in 1 and in 3.
fn color_rooted_cliques(
    g: &Graph,
    spine: &[VertexId],
    cliques_at: impl Fn(VertexId, &[VertexId]) -> Vec<Vec<VertexId>>,
    colors: &mut [ColorId],
) {
    let on_spine = VertexSet::from_ids(g.vertex_count(), spine.iter().copied()).expect("valid");
    let mut members: Vec<Vec<VertexId>> = vec![Vec::new(); spine.len()];
    for x in g.vertices().filter(|&x| !on_spine.contains(x)) {
        if let Some(i) = spine.iter().position(|&v| g.has_edge(v, x)) {
            members[i].push(x);
        }
    }
    for (i, &v) in spine.iter().enumerate() {
        for q in cliques_at(v, &members[i]) {
            let u = *q.iter().min().expect("cliques are nonempty");
            set_if_free(colors, g, u, v, 3);
            for &x in q.iter().filter(|&&x| x != u) {
                set_if_free(colors, g, u, x, 2);
                set_if_free(colors, g, x, v, 1);
            }
        }
    }
}

/// Maximal cliques of `G[members]`, all of whose vertices are adjacent to
/// the root by construction of `members`.
fn maximal_cliques(g: &Graph, members: &[VertexId]) -> Vec<Vec<VertexId>> {
    fn extend(
        g: &Graph,
        r: &mut Vec<VertexId>,
        p: Vec<VertexId>,
        mut x: Vec<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let mut p = p;
        while let Some(v) = p.first().copied() {
            let keep = |s: &[VertexId]| s.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            r.push(v);
            extend(g, r, keep(&p), keep(&x), out);
            r.pop();
            p.remove(0);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    extend(g, &mut Vec::new(), members.to_vec(), Vec::new(), &mut out);
    out.retain(|c| !c.is_empty());
    out
}

/// A coloring with at most 3 colors of a connected interval graph with
/// minimum degree at least 2.
///
/// The dominating path alternates 1 and 2; cliques off the path are
/// colored as in `color_rooted_cliques`; remaining edges get 1.
pub fn color_interval(
    g: &Graph,
    rep: &IntervalRepresentation,
    budget: &Budget,
) -> Result<ConstructionOutcome> {
    require_class_instance(g, &rep.realize()?)?;
    let path = rep.dominating_path()?.vertices;
    let mut colors = vec![UNCOLORED; g.edge_count()];
    for (i, w) in path.windows(2).enumerate() {
        set(&mut colors, g, w[0], w[1], 1 + (i % 2) as ColorId);
    }
    color_rooted_cliques(g, &path, |v, m| rep.rooted_cliques(v, m), &mut colors);
    fill(&mut colors);
    settle(g, &colors, None, 3, budget)
}

/// A coloring with at most 3 colors of a connected circular-arc graph with
/// minimum degree at least 2 whose arcs cover the circle.
///
/// The dominating cycle alternates 1 and 2 starting from its
/// lexicographically smallest edge; on an odd cycle that edge is
/// recolored 3. Off-cycle cliques are handled as for interval graphs.
pub fn color_circular_arc(
    g: &Graph,
    rep: &ArcRepresentation,
    budget: &Budget,
) -> Result<ConstructionOutcome> {
    require_class_instance(g, &rep.realize()?)?;
    let cycle = rep.dominating_cycle()?.vertices;
    let len = cycle.len();
    let edge = |i: usize| {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        (a.min(b), a.max(b))
    };
    let start = (0..len).min_by_key(|&i| edge(i)).unwrap();
    let mut colors = vec![UNCOLORED; g.edge_count()];
    for j in 0..len {
        let (a, b) = edge((start + j) % len);
        set(&mut colors, g, a, b, 1 + (j % 2) as ColorId);
    }
    if len % 2 == 1 {
        let (a, b) = edge(start);
        set(&mut colors, g, a, b, 3);
    }
    color_rooted_cliques(g, &cycle, |_, m| maximal_cliques(g, m), &mut colors);
    fill(&mut colors);
    settle(g, &colors, None, 3, budget)
}
