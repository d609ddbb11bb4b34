//! Simple undirected graphs with dense vertex ids, plus the structural
//! predicates and serializations the solvers are built on.
//!
//! Edges are stored in canonical order: each edge as `(min, max)`, the list
//! sorted lexicographically. An edge's position in that list is its *edge id*;
//! every edge labeling or coloring in the crate is aligned to it.

mod cycles;
mod euler;
pub mod families;
pub mod io;
mod planarity;
mod props;

pub use cycles::{has_cycle_2_mod_4, has_cycle_2_mod_4_capped, CycleClassReport, DEFAULT_CYCLE_CAP};
pub use euler::euler_tour;
pub use planarity::{is_planar, planar_embedding, Embedding};
pub use props::{connected_components, degree_profile, is_bipartite, odd_cycle, Bipartition, DegreeProfile};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // neighbors of v are adj[offset[v]..offset[v + 1]]; incident holds the
    // matching edge ids
    offset: Vec<usize>,
    adj: Vec<usize>,
    incident: Vec<usize>,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a simple graph. Self-loops, repeated edges and out-of-range
    /// endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges = edges.into_iter();
        let mut canon = Vec::with_capacity(edges.size_hint().0);
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut offset = vec![0; n + 1];
        for &(u, v) in &canon {
            offset[u + 1] += 1;
            offset[v + 1] += 1;
        }
        for v in 0..n {
            offset[v + 1] += offset[v];
        }
        let mut fill = offset.clone();
        let mut adj = vec![0; 2 * canon.len()];
        let mut incident = vec![0; 2 * canon.len()];
        // canon is sorted, so every list comes out ascending: smaller
        // neighbors arrive first, while their own blocks are processed
        for (id, &(u, v)) in canon.iter().enumerate() {
            adj[fill[u]] = v;
            incident[fill[u]] = id;
            fill[u] += 1;
            adj[fill[v]] = u;
            incident[fill[v]] = id;
            fill[v] += 1;
        }
        Ok(Graph {
            n,
            edges: canon,
            offset,
            adj,
            incident,
            names: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// Neighbors of `v` in increasing order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[self.offset[v]..self.offset[v + 1]]
    }

    /// Ids of the edges at `v`, aligned with [`Graph::neighbors`].
    #[inline]
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[self.offset[v]..self.offset[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offset[v + 1] - self.offset[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).max()
    }

    /// Subgraph induced on `vertices` (in the given order). Returns the new
    /// graph and the map from new ids back to the old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            (index[u] != usize::MAX && index[v] != usize::MAX).then(|| (index[u], index[v]))
        });
        let g = Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph");
        (g, vertices.to_vec())
    }

    /// Spanning subgraph keeping only the listed edge ids.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> Graph {
        Graph::new(self.n, edge_ids.iter().map(|&e| self.edges[e]))
            .expect("edge subset of a simple graph")
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("union of simple graphs")
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3
            && self.m() == self.n
            && self.vertices().all(|v| self.degree(v) == 2)
            && connected_components(self).len() == 1
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

/// A graph with an integer weight on every vertex. Weights may be zero or
/// negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexWeightedGraph {
    pub graph: Graph,
    weights: Vec<i64>,
}

impl VertexWeightedGraph {
    pub fn new(graph: Graph, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != graph.n() {
            return Err(Error::LengthMismatch {
                expected: graph.n(),
                actual: weights.len(),
            });
        }
        Ok(VertexWeightedGraph { graph, weights })
    }

    #[inline]
    pub fn weight(&self, v: usize) -> i64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }
}
