//! Edge versions of the two decompositions: NAE edge colorings (every vertex
//! sees both colors) and 1-in-Degree edge colorings, which are perfect
//! matchings.

mod matching;
mod nae;

pub use matching::{maximum_matching, one_in_degree_edge};
pub use nae::{nae_edge_coloring, odd_cycle_coloring};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default edge bound for [`brute_force_nae_edge`].
pub const BRUTE_FORCE_EDGE_BOUND: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Red,
    Blue,
}

impl EdgeColor {
    pub fn flip(self) -> Self {
        match self {
            EdgeColor::Red => EdgeColor::Blue,
            EdgeColor::Blue => EdgeColor::Red,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EdgeColor::Red => "red",
            EdgeColor::Blue => "blue",
        }
    }
}

/// Colors aligned to canonical edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoEdgeColoring {
    pub colors: Vec<EdgeColor>,
}

/// Edge ids of a matching, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<usize>,
}

impl Matching {
    pub fn is_matching_of(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.edges.iter().all(|&e| {
            if e >= g.m() {
                return false;
            }
            let (u, v) = g.edge(e);
            let fresh = !used[u] && !used[v];
            used[u] = true;
            used[v] = true;
            fresh
        })
    }

    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        self.is_matching_of(g) && 2 * self.edges.len() == g.n()
    }
}

pub fn verify_nae_edge(g: &Graph, c: &TwoEdgeColoring) -> Result<bool> {
    if c.colors.len() != g.m() {
        return Err(Error::LengthMismatch { expected: g.m(), actual: c.colors.len() });
    }
    Ok(g.vertices().all(|v| {
        let inc = g.incident_edges(v);
        inc.iter().any(|&e| c.colors[e] != c.colors[inc[0]])
    }))
}

pub fn brute_force_nae_edge(g: &Graph) -> Result<Option<TwoEdgeColoring>> {
    brute_force_nae_edge_bounded(g, BRUTE_FORCE_EDGE_BOUND)
}

/// First coloring in the order "edge 0 most significant, red before blue".
/// A vertex is tested as soon as its last incident edge is colored, which
/// only skips colorings already known to fail.
pub fn brute_force_nae_edge_bounded(g: &Graph, bound: usize) -> Result<Option<TwoEdgeColoring>> {
    if g.m() > bound {
        return Err(Error::BruteForceBound { size: g.m(), limit: bound });
    }
    if g.vertices().any(|v| g.degree(v) < 2) {
        return Ok(None);
    }
    // closing[e]: vertices whose largest incident edge id is e
    let mut closing = vec![Vec::new(); g.m()];
    for v in g.vertices() {
        closing[*g.incident_edges(v).iter().max().expect("degree >= 2")].push(v);
    }
    let mut colors = vec![EdgeColor::Red; g.m()];
    fn go(e: usize, g: &Graph, closing: &[Vec<usize>], colors: &mut [EdgeColor]) -> bool {
        if e == colors.len() {
            return true;
        }
        for c in [EdgeColor::Red, EdgeColor::Blue] {
            colors[e] = c;
            let ok = closing[e].iter().all(|&v| {
                let inc = g.incident_edges(v);
                inc.iter().any(|&f| colors[f] != colors[inc[0]])
            });
            if ok && go(e + 1, g, closing, colors) {
                return true;
            }
        }
        false
    }
    Ok(go(0, g, &closing, &mut colors).then(|| TwoEdgeColoring { colors }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use EdgeColor::*;

    #[test]
    fn verify_examples() {
        // C4 edge order 01 03 12 23: 01 and 12 red, 03 and 23 blue alternates
        let alt = TwoEdgeColoring { colors: vec![Red, Blue, Blue, Red] };
        assert!(verify_nae_edge(&cycle(4), &alt).unwrap());
        let red = TwoEdgeColoring { colors: vec![Red; 4] };
        assert!(!verify_nae_edge(&cycle(4), &red).unwrap());
        let s = star(3);
        for mask in 0..8u32 {
            let colors = (0..3).map(|i| if mask >> i & 1 == 1 { Blue } else { Red }).collect();
            assert!(!verify_nae_edge(&s, &TwoEdgeColoring { colors }).unwrap());
        }
        assert!(verify_nae_edge(&cycle(4), &TwoEdgeColoring { colors: vec![Red] }).is_err());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_nae_edge(&cycle(5)).unwrap(), None);
        let c6 = cycle(6);
        let c = brute_force_nae_edge(&c6).unwrap().unwrap();
        assert!(verify_nae_edge(&c6, &c).unwrap());
        let t = theta([1, 2, 2]);
        let c = brute_force_nae_edge(&t).unwrap().unwrap();
        assert!(verify_nae_edge(&t, &c).unwrap());
        assert!(brute_force_nae_edge(&complete(8)).is_err());
        assert!(brute_force_nae_edge_bounded(&complete(8), 28).unwrap().is_some());
    }

    #[test]
    fn json_colors() {
        let c = TwoEdgeColoring { colors: vec![Red, Blue] };
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"colors":["red","blue"]}"#);
    }
}
