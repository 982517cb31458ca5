//! Seeded generators for random instances of each class.
//!
//! Every generator takes a caller-owned RNG, so a corpus is reproducible
//! from its seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{
    ArcRepresentation, ChainSpec, IntervalRepresentation, ThresholdSpec,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

const MAX_ATTEMPTS: u64 = 1_000_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rejection<T>(what: &'static str, mut draw: impl FnMut() -> Result<Option<T>>) -> Result<T> {
    for _ in 0..MAX_ATTEMPTS {
        if let Some(x) = draw()? {
            return Ok(x);
        }
    }
    Err(Error::BudgetExceeded {
        what,
        explored: MAX_ATTEMPTS,
    })
}

/// Whether `g` is connected, not complete and has minimum degree at least 2.
pub fn is_class_instance(g: &Graph) -> bool {
    g.is_connected() && !g.is_complete() && g.min_degree() >= 2
}

/// Uniform labeled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Result<Graph> {
    match n {
        0 => Err(Error::arg("a tree needs at least one vertex")),
        1 => Graph::new(1, []),
        2 => Graph::new(2, [(0, 1)]),
        _ => {
            let seq: Vec<VertexId> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            Graph::new(n, prufer_edges(n, &seq))
        }
    }
}

/// Edges of the tree with Prüfer sequence `seq` on `seq.len() + 2` vertices.
pub fn prufer_edges(n: usize, seq: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<VertexId> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("Prüfer sequence always leaves a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let last: Vec<VertexId> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

/// `G(n, p)` conditioned on being connected, by rejection.
pub fn random_connected_gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    if n == 0 || !(0.0..=1.0).contains(&p) {
        return Err(Error::arg("need n >= 1 and p in [0, 1]"));
    }
    if n > 1 && p == 0.0 {
        return Err(Error::arg("G(n, 0) is never connected"));
    }
    rejection("connected G(n, p) rejection sampling", || {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::new(n, edges)?;
        Ok(g.is_connected().then_some(g))
    })
}

/// A connected spanning subgraph of `g`: a random spanning tree plus each
/// remaining edge independently with probability `keep`.
pub fn random_connected_spanning_subgraph<R: Rng>(
    rng: &mut R,
    g: &Graph,
    keep: f64,
) -> Result<Graph> {
    g.require_connected()?;
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.shuffle(rng);
    let mut parent: Vec<VertexId> = g.vertices().collect();
    fn find(parent: &mut [VertexId], mut v: VertexId) -> VertexId {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut kept = Vec::new();
    for e in order {
        let (u, v) = g.edges()[e];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            kept.push(e);
        } else if rng.gen_bool(keep) {
            kept.push(e);
        }
    }
    Ok(g.spanning_subgraph(kept))
}

/// `n` random closed intervals with integer endpoints in `[0, span]`.
pub fn random_interval<R: Rng>(
    rng: &mut R,
    n: usize,
    span: i64,
) -> Result<(Graph, IntervalRepresentation)> {
    let iv: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let l = rng.gen_range(0..=span);
            let r = rng.gen_range(l..=span.min(l + span / 2));
            (l, r)
        })
        .collect();
    let rep = IntervalRepresentation::from_integers(&iv)?;
    Ok((rep.realize()?, rep))
}

/// Connected, non-complete interval graph with `δ >= 2` on 5 to 8 vertices.
pub fn random_interval_instance<R: Rng>(rng: &mut R) -> Result<(Graph, IntervalRepresentation)> {
    rejection("interval instance rejection sampling", || {
        let n = rng.gen_range(5..=8);
        let (g, rep) = random_interval(rng, n, 2 * n as i64)?;
        Ok(is_class_instance(&g).then_some((g, rep)))
    })
}

/// `n` random arcs on a grid of `grid` points around the circle.
pub fn random_arcs<R: Rng>(
    rng: &mut R,
    n: usize,
    grid: i64,
) -> Result<(Graph, ArcRepresentation)> {
    let arcs: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let s = rng.gen_range(0..grid);
            let len = rng.gen_range(0..=grid / 2);
            (s, (s + len) % grid)
        })
        .collect();
    let rep = ArcRepresentation::from_grid(grid, &arcs)?;
    Ok((rep.realize()?, rep))
}

/// Connected, non-complete circular-arc graph with `δ >= 2` on 5 to 8
/// vertices whose arcs cover the whole circle.
pub fn random_arc_instance<R: Rng>(rng: &mut R) -> Result<(Graph, ArcRepresentation)> {
    rejection("circular-arc instance rejection sampling", || {
        let n = rng.gen_range(5..=8);
        let (g, rep) = random_arcs(rng, n, 3 * n as i64)?;
        Ok((is_class_instance(&g) && rep.uncovered_point().is_none()).then_some((g, rep)))
    })
}

/// Random integer weights in `0..=n` and a threshold in `1..=2n`.
pub fn random_threshold<R: Rng>(rng: &mut R, n: usize) -> Result<(Graph, ThresholdSpec)> {
    let top = n as i64;
    let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=top)).collect();
    let spec = ThresholdSpec::from_integers(&weights, rng.gen_range(1..=2 * top));
    Ok((spec.realize()?, spec))
}

/// Connected, non-complete threshold graph with `δ >= 2` on 5 to 8 vertices.
pub fn random_threshold_instance<R: Rng>(rng: &mut R) -> Result<(Graph, ThresholdSpec)> {
    rejection("threshold instance rejection sampling", || {
        let n = rng.gen_range(5..=8);
        let (g, spec) = random_threshold(rng, n)?;
        Ok(is_class_instance(&g).then_some((g, spec)))
    })
}

/// Connected chain graph with `δ >= 2` and `2 <= |A|, |B| <= 6`, under a
/// random vertex labeling.
pub fn random_chain_instance<R: Rng>(rng: &mut R) -> Result<(Graph, ChainSpec)> {
    let a = rng.gen_range(2..=6);
    let b = rng.gen_range(2..=6);
    // two A vertices see all of B, so every B vertex has degree >= 2
    let mut degrees = vec![b, b];
    degrees.extend((2..a).map(|_| rng.gen_range(2..=b)));
    degrees.shuffle(rng);
    let base = ChainSpec::from_degrees(&degrees, b)?;
    let mut label: Vec<VertexId> = (0..a + b).collect();
    label.shuffle(rng);
    let spec = ChainSpec {
        vertex_count: a + b,
        a_order: base.a_order.iter().map(|&v| label[v]).collect(),
        b: base.b.iter().map(|&v| label[v]).collect(),
        neighborhoods: base
            .neighborhoods
            .iter()
            .map(|nb| nb.iter().map(|&v| label[v]).collect())
            .collect(),
    };
    let g = spec.realize()?;
    Ok((g, spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{is_at_free, is_chain_graph, max_weight_dominating_vertex};

    #[test]
    fn prufer_decodes_known_sequence() {
        // sequence (3, 3, 3, 4) on 6 vertices
        let mut e = prufer_edges(6, &[3, 3, 3, 4]);
        e.iter_mut().for_each(|p| *p = (p.0.min(p.1), p.0.max(p.1)));
        e.sort();
        assert_eq!(e, vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn trees_are_trees() {
        let mut r = rng(1);
        for n in 1..10 {
            assert!(random_tree(&mut r, n).unwrap().is_tree());
        }
    }

    #[test]
    fn instances_meet_their_conditions() {
        let mut r = rng(7);
        for _ in 0..20 {
            let (g, rep) = random_interval_instance(&mut r).unwrap();
            assert!(is_class_instance(&g) && rep.realize().unwrap() == g);
            assert!(is_at_free(&g).is_free());
            let (g, rep) = random_arc_instance(&mut r).unwrap();
            assert!(is_class_instance(&g) && rep.dominating_cycle().is_ok());
            let (g, spec) = random_threshold_instance(&mut r).unwrap();
            assert!(is_class_instance(&g));
            assert!(max_weight_dominating_vertex(&spec).is_ok());
            let (g, spec) = random_chain_instance(&mut r).unwrap();
            assert!(g.is_connected() && g.min_degree() >= 2);
            assert!(is_chain_graph(&g).is_some());
            assert!(spec.first_b().is_some());
        }
    }

    #[test]
    fn spanning_subgraphs_are_connected() {
        let mut r = rng(3);
        let g = Graph::complete(6);
        for _ in 0..20 {
            let h = random_connected_spanning_subgraph(&mut r, &g, 0.3).unwrap();
            assert!(g.is_spanning_connected_subgraph(&h).unwrap());
        }
    }

    #[test]
    fn seeds_reproduce() {
        let a = random_connected_gnp(&mut rng(11), 7, 0.4).unwrap();
        let b = random_connected_gnp(&mut rng(11), 7, 0.4).unwrap();
        assert_eq!(a, b);
    }
}
