//! Vertex decompositions `(A, B)` of a graph: NAE (every neighborhood meets
//! both parts), 1-in-Degree (every neighborhood meets `A` exactly once) and
//! the vertex-weighted variant, plus the neighborhood-hypergraph view.

mod exact_cover;
mod hypergraph;
mod nae;
mod weighted;

pub use exact_cover::{solve_one_in_degree, solve_one_in_degree_with_stats, ExactCover};
pub use hypergraph::{fano_plane, neighborhood_hypergraph, two_color_hypergraph, Hypergraph};
pub use nae::{solve_nae, solve_nae_with_stats};
pub use weighted::{solve_one_in_degree_weighted, solve_one_in_degree_weighted_with_stats};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexWeightedGraph};

/// The part `A`, stored sorted; `B` is its complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    #[serde(rename = "A")]
    a: Vec<usize>,
}

impl Decomposition {
    pub fn new(mut a: Vec<usize>) -> Self {
        a.sort_unstable();
        a.dedup();
        Decomposition { a }
    }

    pub fn from_indicator(f: &[bool]) -> Self {
        Decomposition { a: (0..f.len()).filter(|&v| f[v]).collect() }
    }

    pub fn part_a(&self) -> &[usize] {
        &self.a
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a.binary_search(&v).is_ok()
    }

    /// `f(v) = 1` iff `v ∈ A`, for `v < n`.
    pub fn indicator(&self, n: usize) -> Result<Vec<bool>> {
        let mut f = vec![false; n];
        for &v in &self.a {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            f[v] = true;
        }
        Ok(f)
    }

    pub fn part_b(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|&v| !self.contains(v)).collect()
    }
}

/// Number of `A`-neighbors of each vertex.
fn a_counts(g: &Graph, d: &Decomposition) -> Result<Vec<usize>> {
    let f = d.indicator(g.n())?;
    Ok(g.vertices()
        .map(|v| g.neighbors(v).iter().filter(|&&u| f[u]).count())
        .collect())
}

pub fn verify_one_in_degree(g: &Graph, d: &Decomposition) -> Result<bool> {
    Ok(a_counts(g, d)?.iter().all(|&c| c == 1))
}

pub fn verify_nae(g: &Graph, d: &Decomposition) -> Result<bool> {
    let counts = a_counts(g, d)?;
    Ok(g.vertices().all(|v| counts[v] >= 1 && counts[v] < g.degree(v)))
}

/// Every vertex's `A`-neighbors have weights summing to exactly 1.
pub fn verify_one_in_degree_weighted(wg: &VertexWeightedGraph, d: &Decomposition) -> Result<bool> {
    let g = &wg.graph;
    let f = d.indicator(g.n())?;
    Ok(g.vertices().all(|v| {
        g.neighbors(v)
            .iter()
            .filter(|&&u| f[u])
            .map(|&u| wg.weight(u))
            .sum::<i64>()
            == 1
    }))
}
