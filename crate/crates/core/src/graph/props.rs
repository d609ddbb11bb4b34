use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Two disjoint vertex sets covering the graph with every edge crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    pub fn side_of(&self, n: usize) -> Vec<bool> {
        let mut side = vec![false; n];
        for &v in &self.right {
            side[v] = true;
        }
        side
    }
}

/// BFS 2-coloring. The smallest vertex of each component goes left.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for &u in g.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!c);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (left, right): (Vec<usize>, Vec<usize>) = g.vertices().partition(|&v| color[v] == Some(false));
    Some(Bipartition { left, right })
}

/// A closed walk of odd length that is a simple cycle, as a vertex sequence
/// (closing edge implied), or `None` for bipartite graphs. Found from the
/// first BFS edge joining two vertices of equal depth parity.
pub fn odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in g.vertices() {
        if depth[s] != usize::MAX {
            continue;
        }
        depth[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if depth[u] % 2 == depth[v] % 2 {
                    // climb to the common ancestor
                    let (mut a, mut b) = (v, u);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a];
                            left.push(a);
                        } else {
                            b = parent[b];
                            right.push(b);
                        }
                    }
                    right.pop();
                    left.extend(right.into_iter().rev());
                    return Some(left);
                }
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    /// `Some(r)` iff every vertex has degree `r`.
    pub regular: Option<usize>,
    /// `Some(d)` iff every degree lies in `{d, d + 1}`.
    pub semiregular: Option<usize>,
}

pub fn degree_profile(g: &Graph) -> Result<DegreeProfile> {
    let min_degree = g.min_degree().ok_or(Error::EmptyGraph)?;
    let max_degree = g.max_degree().ok_or(Error::EmptyGraph)?;
    Ok(DegreeProfile {
        min_degree,
        max_degree,
        regular: (min_degree == max_degree).then_some(min_degree),
        semiregular: (max_degree - min_degree <= 1).then_some(min_degree),
    })
}

/// Components as sorted vertex lists, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
