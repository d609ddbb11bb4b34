use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    num_vertices: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(num_vertices: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        for e in &hyperedges {
            if e.is_empty() {
                return Err(precondition("empty hyperedge"));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= num_vertices) {
                return Err(Error::VertexOutOfRange { vertex: v, n: num_vertices });
            }
        }
        Ok(Hypergraph { num_vertices, hyperedges })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// `Some(r)` when every hyperedge has exactly `r` members.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.hyperedges.first()?.len();
        self.hyperedges.iter().all(|e| e.len() == r).then_some(r)
    }

    /// `Some(r)` when every vertex lies in exactly `r` hyperedges.
    pub fn regularity(&self) -> Option<usize> {
        let mut deg = vec![0; self.num_vertices];
        for e in &self.hyperedges {
            for &v in e {
                deg[v] += 1;
            }
        }
        let r = *deg.first()?;
        deg.iter().all(|&d| d == r).then_some(r)
    }

    pub fn without_edge(&self, i: usize) -> Hypergraph {
        let mut hyperedges = self.hyperedges.clone();
        hyperedges.remove(i);
        Hypergraph { num_vertices: self.num_vertices, hyperedges }
    }
}

/// One hyperedge `N(v)` per vertex, in vertex order. Proper 2-colorings of
/// it are exactly the NAE decompositions of `g`.
pub fn neighborhood_hypergraph(g: &Graph) -> Result<Hypergraph> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(precondition(format!("vertex {v} is isolated")));
    }
    Hypergraph::new(g.n(), g.vertices().map(|v| g.neighbors(v).to_vec()).collect())
}

/// Lines `{i, i+1, i+3} mod 7`.
pub fn fano_plane() -> Hypergraph {
    let edges = (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
    Hypergraph::new(7, edges).expect("valid hypergraph")
}

/// Colors 1 and 2 per vertex with no monochromatic hyperedge, by plain
/// backtracking in vertex order (color 1 first). A singleton hyperedge makes
/// the hypergraph uncolorable.
pub fn two_color_hypergraph(h: &Hypergraph) -> Option<Vec<u8>> {
    let n = h.num_vertices;
    // hyperedges checked when their largest member gets colored
    let mut closing = vec![Vec::new(); n];
    for (i, e) in h.hyperedges.iter().enumerate() {
        closing[*e.iter().max().expect("nonempty")].push(i);
    }
    let mut color = vec![0u8; n];
    fn go(v: usize, h: &Hypergraph, closing: &[Vec<usize>], color: &mut [u8]) -> bool {
        if v == color.len() {
            return true;
        }
        for c in [1, 2] {
            color[v] = c;
            let ok = closing[v].iter().all(|&i| {
                let e = &h.hyperedges[i];
                e.iter().any(|&u| color[u] != color[e[0]])
            });
            if ok && go(v + 1, h, closing, color) {
                return true;
            }
        }
        color[v] = 0;
        false
    }
    go(0, h, &closing, &mut color).then_some(color)
}
