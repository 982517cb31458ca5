use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::classes::{IntervalRepresentation, Rational};
use crate::domination::classify;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// A closed arc on a circle of circumference 1, running clockwise from
/// `start` for `length`. A length of 1 is the whole circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub start: Rational,
    pub length: Rational,
}

impl Arc {
    /// Arc from `start` to `end`, both in `[0, 1]`; `end < start` wraps
    /// through 0, `start = 0, end = 1` is the full circle.
    pub fn from_endpoints(start: Rational, end: Rational) -> Result<Self> {
        let zero = Rational::zero();
        let one = Rational::one();
        if start < zero || start > one || end < zero || end > one {
            return Err(Error::arg("arc endpoints must lie in [0, 1]"));
        }
        let length = if end >= start {
            end - start
        } else {
            one - start + end
        };
        let start = if start == one { zero } else { start };
        Ok(Arc { start, length })
    }

    pub fn is_full(&self) -> bool {
        self.length >= Rational::one()
    }

    /// Clockwise offset of `p` from the arc start, in `[0, 1)`.
    fn offset(&self, p: Rational) -> Rational {
        wrap(p - self.start)
    }

    pub fn contains(&self, p: Rational) -> bool {
        self.is_full() || self.offset(p) <= self.length
    }

    pub fn intersects(&self, other: &Arc) -> bool {
        self.contains(other.start) || other.contains(self.start)
    }

    pub fn end(&self) -> Rational {
        wrap(self.start + self.length)
    }
}

fn wrap(x: Rational) -> Rational {
    x - x.floor()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcRepresentation {
    arcs: Vec<Arc>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatingCycle {
    /// Cycle in order; the last vertex is adjacent to the first.
    pub vertices: Vec<VertexId>,
}

impl ArcRepresentation {
    pub fn new(arcs: Vec<Arc>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::arg("arc representation is empty"));
        }
        for (v, a) in arcs.iter().enumerate() {
            if a.length < Rational::zero() || a.start < Rational::zero() || a.start >= Rational::one()
            {
                return Err(Error::arg(format!("arc of vertex {v} is malformed")));
            }
        }
        let arcs = arcs
            .into_iter()
            .map(|a| Arc {
                length: a.length.min(Rational::one()),
                ..a
            })
            .collect();
        Ok(ArcRepresentation { arcs })
    }

    /// Arcs given as `(start, end)` in units of `1/denominator` of a turn.
    pub fn from_grid(denominator: i64, arcs: &[(i64, i64)]) -> Result<Self> {
        let arcs = arcs
            .iter()
            .map(|&(s, e)| {
                Arc::from_endpoints(Rational::new(s, denominator), Rational::new(e, denominator))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(arcs)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn realize(&self) -> Result<Graph> {
        let n = self.arcs.len();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.arcs[u].intersects(&self.arcs[v]));
        Graph::new(n, edges)
    }

    /// A point of the circle no arc contains, if any.
    pub fn uncovered_point(&self) -> Option<Rational> {
        if self.arcs.iter().any(Arc::is_full) {
            return None;
        }
        // cut the circle at 0: unwrap every arc onto [0, 2) and sweep [0, 1]
        let mut pieces: Vec<(Rational, Rational)> = Vec::new();
        for a in &self.arcs {
            let end = a.start + a.length;
            pieces.push((a.start, end));
            if end > Rational::one() {
                pieces.push((Rational::zero(), end - Rational::one()));
            }
        }
        pieces.sort();
        if pieces[0].0 > Rational::zero() {
            return Some(Rational::zero());
        }
        let mut reach = pieces[0].1;
        for &(s, e) in &pieces[1..] {
            if s > reach {
                return Some((reach + s) / Rational::from_integer(2));
            }
            reach = reach.max(e);
        }
        if reach < Rational::one() {
            Some((reach + Rational::one()) / Rational::from_integer(2))
        } else {
            None
        }
    }

    /// When the arcs miss some point, cutting the circle there turns them
    /// into an interval model of the same graph.
    pub fn to_intervals(&self) -> Option<IntervalRepresentation> {
        let cut = self.uncovered_point()?;
        let intervals = self
            .arcs
            .iter()
            .map(|a| {
                let s = wrap(a.start - cut);
                (s, s + a.length)
            })
            .collect();
        IntervalRepresentation::new(intervals).ok()
    }

    /// A dominating cycle built from a minimum greedy cover of the circle.
    ///
    /// For each starting arc, arcs are chained clockwise, each time taking
    /// the one that reaches furthest; consecutive arcs of a cover overlap,
    /// and since every arc meets some covering arc the cover dominates.
    pub fn dominating_cycle(&self) -> Result<DominatingCycle> {
        if self.uncovered_point().is_some() {
            return Err(Error::arg(
                "arcs leave part of the circle uncovered; the graph is an interval graph, use its dominating path",
            ));
        }
        let g = self.realize()?;
        let n = self.arcs.len();
        let mut best: Option<Vec<VertexId>> = None;
        for first in 0..n {
            let Some(cover) = self.cover_from(first) else {
                continue;
            };
            if best.as_ref().is_none_or(|b| cover.len() < b.len()) {
                best = Some(cover);
            }
        }
        let cover = best.ok_or_else(|| Error::arg("no circle cover found"))?;
        let cycle = if cover.len() >= 3 {
            cover
        } else {
            close_with_triangle(&g, &cover).ok_or_else(|| {
                Error::arg("circle covered by at most two arcs and no triangle contains them")
            })?
        };
        let set = VertexSet::from_ids(n, cycle.iter().copied())?;
        if !classify(&g, &set)?.is_dominating {
            return Err(Error::arg("cover does not dominate the graph"));
        }
        Ok(DominatingCycle { vertices: cycle })
    }

    fn cover_from(&self, first: VertexId) -> Option<Vec<VertexId>> {
        let origin = self.arcs[first].start;
        if self.arcs[first].is_full() {
            return Some(vec![first]);
        }
        let mut chosen = vec![first];
        let mut reach = self.arcs[first].length;
        let mut used: BTreeSet<VertexId> = BTreeSet::from([first]);
        while reach < Rational::one() {
            let candidate = self
                .arcs
                .iter()
                .enumerate()
                .filter(|(v, _)| !used.contains(v))
                .filter_map(|(v, a)| {
                    let o = wrap(a.start - origin);
                    (o <= reach).then_some((o + a.length, v))
                })
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))?;
            if candidate.0 <= reach {
                return None;
            }
            reach = candidate.0;
            chosen.push(candidate.1);
            used.insert(candidate.1);
        }
        Some(chosen)
    }
}

/// Extends a cover of one or two vertices to a triangle.
fn close_with_triangle(g: &Graph, cover: &[VertexId]) -> Option<Vec<VertexId>> {
    match *cover {
        [a, b] => g
            .neighbors(a)
            .find(|&w| w != b && g.has_edge(w, b))
            .map(|w| vec![a, w, b]),
        [a] => g.neighbors(a).find_map(|w| {
            g.neighbors(w)
                .find(|&x| x != a && g.has_edge(x, a))
                .map(|x| vec![a, w, x])
        }),
        _ => None,
    }
}
