use crate::classes::Rational;
use crate::domination::classify;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// Vertex weights and a threshold: `u ~ v` iff `w(u) + w(v) >= t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdSpec {
    pub weights: Vec<Rational>,
    pub threshold: Rational,
}

impl ThresholdSpec {
    pub fn from_integers(weights: &[i64], threshold: i64) -> Self {
        ThresholdSpec {
            weights: weights.iter().map(|&w| Rational::from_integer(w)).collect(),
            threshold: Rational::from_integer(threshold),
        }
    }

    pub fn realize(&self) -> Result<Graph> {
        let n = self.weights.len();
        if n == 0 {
            return Err(Error::arg("threshold spec has no vertices"));
        }
        let w = &self.weights;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| w[u] + w[v] >= self.threshold);
        Graph::new(n, edges)
    }
}

/// A maximum-weight vertex (smallest id on ties); it is adjacent to every
/// other vertex whenever the graph is connected.
pub fn max_weight_dominating_vertex(spec: &ThresholdSpec) -> Result<VertexId> {
    let g = spec.realize()?;
    if !g.is_connected() {
        return Err(Error::arg("threshold graph is disconnected"));
    }
    let v = (0..spec.weights.len())
        .max_by(|&a, &b| spec.weights[a].cmp(&spec.weights[b]).then(b.cmp(&a)))
        .unwrap();
    let cert = classify(&g, &VertexSet::from_ids(g.vertex_count(), [v])?)?;
    if !cert.is_dominating {
        return Err(Error::arg("maximum-weight vertex does not dominate"));
    }
    Ok(v)
}

/// Threshold weights for `g` if it is a threshold graph.
///
/// Peels off isolated or dominating vertices one at a time; the graph is
/// threshold iff this empties it. A vertex peeled at step `i` as
/// dominating gets weight `n - i`, as isolated `-(n - i)`, with threshold 1.
pub fn recognize_threshold(g: &Graph) -> Option<ThresholdSpec> {
    let n = g.vertex_count();
    let mut alive = VertexSet::full(n);
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut weights = vec![Rational::from_integer(0); n];
    for step in 0..n {
        let remaining = n - step;
        let (v, dominating) = alive.iter().find_map(|v| {
            if degree[v] == remaining - 1 {
                Some((v, true))
            } else if degree[v] == 0 {
                Some((v, false))
            } else {
                None
            }
        })?;
        let w = (n - step) as i64;
        weights[v] = Rational::from_integer(if dominating { w } else { -w });
        alive.remove(v);
        for u in g.neighbors(v) {
            if alive.contains(u) {
                degree[u] -= 1;
            }
        }
    }
    Some(ThresholdSpec {
        weights,
        threshold: Rational::from_integer(1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realize_examples() {
        let g = ThresholdSpec::from_integers(&[3, 3, 1, 1], 4).realize().unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let g = ThresholdSpec::from_integers(&[2, 2, 2, 2], 4).realize().unwrap();
        assert!(g.is_complete());
    }

    #[test]
    fn dominating_vertex() {
        assert_eq!(
            max_weight_dominating_vertex(&ThresholdSpec::from_integers(&[5, 1, 1, 1], 6)).unwrap(),
            0
        );
        assert_eq!(
            max_weight_dominating_vertex(&ThresholdSpec::from_integers(&[2, 2, 2], 4)).unwrap(),
            0
        );
        assert!(max_weight_dominating_vertex(&ThresholdSpec::from_integers(&[1, 1, 1], 4)).is_err());
    }

    #[test]
    fn recognition_round_trips() {
        let spec = ThresholdSpec::from_integers(&[3, 3, 1, 1, 2], 4);
        let g = spec.realize().unwrap();
        let back = recognize_threshold(&g).unwrap();
        assert_eq!(back.realize().unwrap(), g);
        assert!(recognize_threshold(&Graph::path(4)).is_none());
        assert!(recognize_threshold(&Graph::cycle(4)).is_none());
        assert!(recognize_threshold(&Graph::star(4)).is_some());
    }
}
