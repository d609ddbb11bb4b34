use super::{connected_components, Graph};
use crate::error::{precondition, Result};

/// Closed trail from `start` through every edge exactly once, as edge ids in
/// traversal order (Hierholzer, lowest neighbor first).
pub fn euler_tour(g: &Graph, start: usize) -> Result<Vec<usize>> {
    g.check_vertex(start)?;
    if g.degree(start) == 0 {
        return Err(precondition(format!("start vertex {start} is isolated")));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) % 2 == 1) {
        return Err(precondition(format!("vertex {v} has odd degree")));
    }
    let nontrivial = connected_components(g)
        .into_iter()
        .filter(|c| c.len() > 1)
        .count();
    if nontrivial > 1 {
        return Err(precondition("edges span more than one component"));
    }

    let mut used = vec![false; g.m()];
    let mut cursor = vec![0usize; g.n()];
    // (vertex, edge used to reach it)
    let mut stack = vec![(start, usize::MAX)];
    let mut trail = Vec::with_capacity(g.m());
    while let Some(&(v, _)) = stack.last() {
        let inc = g.incident_edges(v);
        while cursor[v] < inc.len() && used[inc[cursor[v]]] {
            cursor[v] += 1;
        }
        if cursor[v] < inc.len() {
            let e = inc[cursor[v]];
            used[e] = true;
            stack.push((g.neighbors(v)[cursor[v]], e));
        } else {
            let (_, e) = stack.pop().unwrap();
            if e != usize::MAX {
                trail.push(e);
            }
        }
    }
    trail.reverse();
    Ok(trail)
}
