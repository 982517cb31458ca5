use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub const HAMILTONIAN_VERTEX_LIMIT: usize = 14;

/// A Hamiltonian path of `g`, or `None` if exhaustive search finds none.
///
/// Depth-first extension from low-degree start vertices, trying the
/// neighbor with the fewest unvisited neighbors first. Dead
/// `(visited set, endpoint)` states are remembered.
pub fn hamiltonian_path(g: &Graph) -> Result<Option<Vec<VertexId>>> {
    hamiltonian_path_with_limit(g, HAMILTONIAN_VERTEX_LIMIT)
}

pub fn hamiltonian_path_with_limit(g: &Graph, limit: usize) -> Result<Option<Vec<VertexId>>> {
    let n = g.vertex_count();
    if n > limit || n > 24 {
        return Err(Error::BudgetExceeded {
            what: "hamiltonian path vertex limit",
            explored: n as u64,
        });
    }
    if n == 1 {
        return Ok(Some(vec![0]));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let mut search = Search {
        g,
        dead: FixedBitSet::with_capacity((1usize << n) * n),
        path: Vec::with_capacity(n),
    };
    let mut starts: Vec<VertexId> = g.vertices().collect();
    starts.sort_by_key(|&v| (g.degree(v), v));
    // more than two pendant vertices rule out a path outright
    if starts.iter().filter(|&&v| g.degree(v) == 1).count() > 2 {
        return Ok(None);
    }
    for s in starts {
        search.path.clear();
        search.path.push(s);
        if search.extend(1 << s) {
            return Ok(Some(search.path));
        }
    }
    Ok(None)
}

struct Search<'g> {
    g: &'g Graph,
    dead: FixedBitSet,
    path: Vec<VertexId>,
}

impl Search<'_> {
    fn extend(&mut self, visited: u32) -> bool {
        let n = self.g.vertex_count();
        if self.path.len() == n {
            return true;
        }
        let last = *self.path.last().unwrap();
        let key = visited as usize * n + last;
        if self.dead.contains(key) {
            return false;
        }
        let free = |w: VertexId| visited & (1 << w) == 0;
        let mut next: Vec<(usize, VertexId)> = self
            .g
            .neighbors(last)
            .filter(|&w| free(w))
            .map(|w| (self.g.neighbors(w).filter(|&x| free(x)).count(), w))
            .collect();
        next.sort_unstable();
        for (_, w) in next {
            self.path.push(w);
            if self.extend(visited | (1 << w)) {
                return true;
            }
            self.path.pop();
        }
        self.dead.insert(key);
        false
    }
}
