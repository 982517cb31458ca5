use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A bipartite graph whose `A` side, listed in `a_order`, has nested
/// neighborhoods `N(a_1) ⊆ N(a_2) ⊆ …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSpec {
    pub vertex_count: usize,
    pub a_order: Vec<VertexId>,
    pub b: Vec<VertexId>,
    /// `neighborhoods[i]` is `N(a_order[i])`, a subset of `b`.
    pub neighborhoods: Vec<Vec<VertexId>>,
}

impl ChainSpec {
    /// `A = 0..degrees.len()`, `B` the following `b_count` ids, and
    /// `a_i` adjacent to the first `degrees[i]` vertices of `B`.
    pub fn from_degrees(degrees: &[usize], b_count: usize) -> Result<Self> {
        let k = degrees.len();
        let b: Vec<VertexId> = (k..k + b_count).collect();
        let mut sorted = degrees.to_vec();
        sorted.sort_unstable();
        if sorted.last().is_some_and(|&d| d > b_count) {
            return Err(Error::arg("degree exceeds the size of B"));
        }
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&i| (degrees[i], i));
        Ok(ChainSpec {
            vertex_count: k + b_count,
            neighborhoods: order.iter().map(|&i| b[..degrees[i]].to_vec()).collect(),
            a_order: order,
            b,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count;
        let mut side = vec![0u8; n];
        for &a in &self.a_order {
            if a >= n || side[a] != 0 {
                return Err(Error::arg(format!("A vertex {a} repeated or out of range")));
            }
            side[a] = 1;
        }
        for &b in &self.b {
            if b >= n || side[b] != 0 {
                return Err(Error::arg(format!("B vertex {b} repeated or out of range")));
            }
            side[b] = 2;
        }
        if side.contains(&0) {
            return Err(Error::arg("bipartition does not cover every vertex"));
        }
        if self.neighborhoods.len() != self.a_order.len() {
            return Err(Error::arg("one neighborhood per A vertex required"));
        }
        for nb in &self.neighborhoods {
            if nb.iter().any(|&w| w >= n || side[w] != 2) {
                return Err(Error::arg("neighborhood leaves B"));
            }
        }
        for w in self.neighborhoods.windows(2) {
            if !w[0].iter().all(|x| w[1].contains(x)) {
                return Err(Error::arg("neighborhoods are not nested in chain order"));
            }
        }
        Ok(())
    }

    pub fn realize(&self) -> Result<Graph> {
        self.validate()?;
        let edges = self
            .a_order
            .iter()
            .zip(&self.neighborhoods)
            .flat_map(|(&a, nb)| nb.iter().map(move |&b| (a, b)));
        Graph::new(self.vertex_count, edges)
    }

    /// The smallest-id neighbor of the first `A` vertex with a nonempty
    /// neighborhood; it lies in every nonempty neighborhood.
    pub fn first_b(&self) -> Option<VertexId> {
        self.neighborhoods
            .iter()
            .find(|nb| !nb.is_empty())
            .and_then(|nb| nb.iter().min().copied())
    }
}

/// A chain ordering of `g`, if `g` is a chain graph.
///
/// Isolated vertices go to `A` with empty neighborhoods. At most one
/// component may have edges; its two color classes are each tried as `A`,
/// sorted by degree, and checked for nesting.
pub fn is_chain_graph(g: &Graph) -> Option<ChainSpec> {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut nontrivial_root = None;
    for s in g.vertices() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        if g.degree(s) == 0 {
            continue;
        }
        if nontrivial_root.replace(s).is_some() {
            return None;
        }
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    stack.push(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    let isolated: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 0).collect();
    for a_color in [0u8, 1] {
        let mut a: Vec<VertexId> = g
            .vertices()
            .filter(|&v| g.degree(v) > 0 && color[v] == a_color)
            .collect();
        a.sort_by_key(|&v| (g.degree(v), v));
        let b: Vec<VertexId> = g
            .vertices()
            .filter(|&v| g.degree(v) > 0 && color[v] != a_color)
            .collect();
        let neighborhoods: Vec<Vec<VertexId>> =
            a.iter().map(|&v| g.neighbors(v).collect()).collect();
        let nested = neighborhoods
            .windows(2)
            .all(|w| w[0].iter().all(|x| w[1].contains(x)));
        if nested {
            let mut a_order = isolated.clone();
            a_order.extend(a);
            let mut all_nb = vec![Vec::new(); isolated.len()];
            all_nb.extend(neighborhoods);
            return Some(ChainSpec {
                vertex_count: n,
                a_order,
                b,
                neighborhoods: all_nb,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realize_small_chain() {
        let spec = ChainSpec {
            vertex_count: 4,
            a_order: vec![0, 1],
            b: vec![2, 3],
            neighborhoods: vec![vec![2], vec![2, 3]],
        };
        let g = spec.realize().unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2), (1, 3)]);
        assert_eq!(spec.first_b(), Some(2));
        let bad = ChainSpec {
            neighborhoods: vec![vec![3], vec![2]],
            ..spec
        };
        assert!(bad.realize().is_err());
    }

    #[test]
    fn recognition() {
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let spec = is_chain_graph(&k23).unwrap();
        assert_eq!(spec.realize().unwrap(), k23);
        assert!(is_chain_graph(&Graph::cycle(6)).is_none());
        let spec = is_chain_graph(&Graph::path(4)).unwrap();
        assert_eq!(spec.realize().unwrap(), Graph::path(4));
        assert!(is_chain_graph(&Graph::cycle(5)).is_none());
        assert!(is_chain_graph(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()).is_none());
        let with_isolated = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            is_chain_graph(&with_isolated).unwrap().realize().unwrap(),
            with_isolated
        );
    }

    #[test]
    fn from_degrees_orders_a_side() {
        let spec = ChainSpec::from_degrees(&[3, 2, 3], 3).unwrap();
        assert_eq!(spec.a_order, vec![1, 0, 2]);
        let g = spec.realize().unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(spec.first_b(), Some(3));
        assert!(ChainSpec::from_degrees(&[4], 3).is_err());
    }
}
