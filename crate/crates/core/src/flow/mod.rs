//! Zero-sum k-flows on edges (kernel of the incidence matrix) and on
//! vertices (kernel of the adjacency matrix), with labels in
//! `{±1, …, ±(k-1)}`, plus the bridge between vertex 3-flows and
//! 1-in-Degree decompositions of cubic graphs.

mod csp;

use serde::{Deserialize, Serialize};

use crate::decomp::{verify_one_in_degree, Decomposition};
use crate::error::{precondition, Error, Result};
use crate::graph::{connected_components, Graph};
use crate::stats::SolveStats;
use csp::ZeroSumCsp;

/// Labels aligned to canonical edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLabeling {
    pub labels: Vec<i64>,
}

/// Labels aligned to vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabeling {
    pub labels: Vec<i64>,
}

fn in_range(x: i64, k: i64) -> bool {
    x != 0 && x.abs() < k
}

pub fn verify_zero_sum(g: &Graph, lab: &EdgeLabeling, k: i64) -> Result<bool> {
    if lab.labels.len() != g.m() {
        return Err(Error::LengthMismatch { expected: g.m(), actual: lab.labels.len() });
    }
    Ok(lab.labels.iter().all(|&x| in_range(x, k))
        && g.vertices()
            .all(|v| g.incident_edges(v).iter().map(|&e| lab.labels[e]).sum::<i64>() == 0))
}

pub fn verify_vertex_zero_sum(g: &Graph, lab: &VertexLabeling, k: i64) -> Result<bool> {
    if lab.labels.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), actual: lab.labels.len() });
    }
    Ok(lab.labels.iter().all(|&x| in_range(x, k))
        && g.vertices()
            .all(|v| g.neighbors(v).iter().map(|&u| lab.labels[u]).sum::<i64>() == 0))
}

fn check_k(k: i64) -> Result<()> {
    if !(2..=32).contains(&k) {
        return Err(precondition(format!("k = {k} outside 2..=32")));
    }
    Ok(())
}

pub fn solve_zero_sum(g: &Graph, k: i64) -> Result<Option<EdgeLabeling>> {
    Ok(solve_zero_sum_with_stats(g, k)?.0)
}

/// One variable per edge, one sum constraint per vertex. For `k = 3` every
/// cubic constraint is reduced to the patterns `2,-1,-1` / `-2,1,1` by
/// propagation, and search fixes magnitudes (the `±2` matching) before
/// signs.
pub fn solve_zero_sum_with_stats(g: &Graph, k: i64) -> Result<(Option<EdgeLabeling>, SolveStats)> {
    check_k(k)?;
    if g.vertices().any(|v| g.degree(v) == 1) {
        return Ok((None, SolveStats::default()));
    }
    let constraints = g.vertices().map(|v| g.incident_edges(v).to_vec()).collect();
    let mut csp = ZeroSumCsp::new(k, g.m(), constraints);
    let labels = csp.solve();
    Ok((labels.map(|labels| EdgeLabeling { labels }), csp.stats))
}

pub fn solve_vertex_zero_sum(g: &Graph, k: i64) -> Result<Option<VertexLabeling>> {
    Ok(solve_vertex_zero_sum_with_stats(g, k)?.0)
}

pub fn solve_vertex_zero_sum_with_stats(
    g: &Graph,
    k: i64,
) -> Result<(Option<VertexLabeling>, SolveStats)> {
    check_k(k)?;
    let constraints = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    let mut csp = ZeroSumCsp::new(k, g.n(), constraints);
    let labels = csp.solve();
    Ok((labels.map(|labels| VertexLabeling { labels }), csp.stats))
}

fn require_cubic(g: &Graph) -> Result<()> {
    match g.vertices().find(|&v| g.degree(v) != 3) {
        Some(v) => Err(precondition(format!("vertex {v} has degree {}, expected 3", g.degree(v)))),
        None => Ok(()),
    }
}

/// `v ∈ A ↦ 2`, otherwise `-1`.
pub fn decomposition_to_vertex_flow(g: &Graph, d: &Decomposition) -> Result<VertexLabeling> {
    require_cubic(g)?;
    if !verify_one_in_degree(g, d)? {
        return Err(Error::InvalidWitness("not a 1-in-Degree decomposition".into()));
    }
    let f = d.indicator(g.n())?;
    Ok(VertexLabeling { labels: f.iter().map(|&a| if a { 2 } else { -1 }).collect() })
}

/// `A = {v : |label(v)| = 2}`.
pub fn vertex_flow_to_decomposition(g: &Graph, lab: &VertexLabeling) -> Result<Decomposition> {
    require_cubic(g)?;
    if !verify_vertex_zero_sum(g, lab, 3)? {
        return Err(Error::InvalidWitness("not a zero-sum vertex 3-flow".into()));
    }
    let d = Decomposition::new(g.vertices().filter(|&v| lab.labels[v].abs() == 2).collect());
    if !verify_one_in_degree(g, &d)? {
        return Err(Error::InternalAssertion("vertex flow maps to an invalid decomposition".into()));
    }
    Ok(d)
}

/// Structure of a zero-sum 3-flow around its degree-3 vertices `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicStructureReport {
    /// Every `v ∈ S` sees labels `2,-1,-1` or `-2,1,1`.
    pub patterns_hold: bool,
    /// `±2` edges inside `G[S]` form a matching.
    pub heavy_edges_match: bool,
    /// All `±2` edges at vertices of one component of `G[S]` share a sign.
    pub component_signs_agree: bool,
}

impl CubicStructureReport {
    pub fn all(&self) -> bool {
        self.patterns_hold && self.heavy_edges_match && self.component_signs_agree
    }
}

pub fn cubic_structure(g: &Graph, lab: &EdgeLabeling) -> Result<CubicStructureReport> {
    if lab.labels.len() != g.m() {
        return Err(Error::LengthMismatch { expected: g.m(), actual: lab.labels.len() });
    }
    let s: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
    let in_s = |v: usize| g.degree(v) == 3;
    let patterns_hold = s.iter().all(|&v| {
        let mut l: Vec<i64> = g.incident_edges(v).iter().map(|&e| lab.labels[e]).collect();
        l.sort_unstable();
        l == [-2, 1, 1] || l == [-1, -1, 2]
    });
    let mut heavy_deg = vec![0; g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if in_s(u) && in_s(v) && lab.labels[e].abs() == 2 {
            heavy_deg[u] += 1;
            heavy_deg[v] += 1;
        }
    }
    let heavy_edges_match = heavy_deg.iter().all(|&d| d <= 1);
    let (sub, map) = g.induced_subgraph(&s);
    let component_signs_agree = connected_components(&sub).iter().all(|comp| {
        let mut signs = comp.iter().flat_map(|&i| {
            let v = map[i];
            g.incident_edges(v)
                .iter()
                .map(|&e| lab.labels[e])
                .filter(|x| x.abs() == 2)
                .map(i64::signum)
                .collect::<Vec<_>>()
        });
        match signs.next() {
            None => true,
            Some(first) => signs.all(|x| x == first),
        }
    });
    Ok(CubicStructureReport { patterns_hold, heavy_edges_match, component_signs_agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::solve_one_in_degree;
    use crate::graph::families::*;

    fn elab(v: &[i64]) -> EdgeLabeling {
        EdgeLabeling { labels: v.to_vec() }
    }

    fn vlab(v: &[i64]) -> VertexLabeling {
        VertexLabeling { labels: v.to_vec() }
    }

    #[test]
    fn verify_edge_examples() {
        // C4 edges: 01, 03, 12, 23
        assert!(verify_zero_sum(&cycle(4), &elab(&[1, -1, -1, 1]), 2).unwrap());
        let c3 = cycle(3);
        for a in [-2, -1, 1, 2] {
            for b in [-2, -1, 1, 2] {
                for c in [-2, -1, 1, 2] {
                    assert!(!verify_zero_sum(&c3, &elab(&[a, b, c]), 3).unwrap());
                }
            }
        }
        // K4 edges 01 02 03 12 13 23; matching {01, 23}
        assert!(verify_zero_sum(&complete(4), &elab(&[2, -1, -1, -1, -1, 2]), 3).unwrap());
        assert!(verify_zero_sum(&cycle(4), &elab(&[1, -1]), 2).is_err());
    }

    #[test]
    fn solve_edge_examples() {
        assert_eq!(solve_zero_sum(&cycle(5), 3).unwrap(), None);
        let c6 = cycle(6);
        let l = solve_zero_sum(&c6, 2).unwrap().unwrap();
        assert!(verify_zero_sum(&c6, &l, 2).unwrap());
        let k4 = complete(4);
        let l = solve_zero_sum(&k4, 3).unwrap().unwrap();
        assert!(verify_zero_sum(&k4, &l, 3).unwrap());
        assert!(cubic_structure(&k4, &l).unwrap().all());
        assert_eq!(solve_zero_sum(&path(3), 5).unwrap(), None);
        assert!(solve_zero_sum(&c6, 1).is_err());
    }

    #[test]
    fn vertex_examples() {
        assert!(verify_vertex_zero_sum(&cycle(4), &vlab(&[1, 1, -1, -1]), 2).unwrap());
        assert!(!verify_vertex_zero_sum(&cycle(3), &vlab(&[1, 1, -1]), 3).unwrap());
        let k33 = complete_bipartite(3, 3);
        assert!(verify_vertex_zero_sum(&k33, &vlab(&[2, -1, -1, 2, -1, -1]), 3).unwrap());
        let l = solve_vertex_zero_sum(&cycle(4), 2).unwrap().unwrap();
        assert_eq!(l.labels[0], -l.labels[2]);
        assert_eq!(l.labels[1], -l.labels[3]);
        assert_eq!(solve_vertex_zero_sum(&cycle(3), 3).unwrap(), None);
        assert_eq!(solve_vertex_zero_sum(&cycle(6), 3).unwrap(), None);
    }

    #[test]
    fn bridges() {
        let k33 = complete_bipartite(3, 3);
        let d = Decomposition::new(vec![0, 3]);
        let lab = decomposition_to_vertex_flow(&k33, &d).unwrap();
        assert!(verify_vertex_zero_sum(&k33, &lab, 3).unwrap());
        assert_eq!(vertex_flow_to_decomposition(&k33, &lab).unwrap(), d);
        assert!(decomposition_to_vertex_flow(&complete(4), &Decomposition::new(vec![0])).is_err());
        // a cubic graph needs |A| = n/3, so the 3-cube has neither object
        let q3 = hypercube(3);
        assert_eq!(solve_one_in_degree(&q3), None);
        assert_eq!(solve_vertex_zero_sum(&q3, 3).unwrap(), None);
        let p3 = prism(3);
        let d = solve_one_in_degree(&p3).unwrap();
        let lab = decomposition_to_vertex_flow(&p3, &d).unwrap();
        assert!(verify_vertex_zero_sum(&p3, &lab, 3).unwrap());
        assert_eq!(vertex_flow_to_decomposition(&p3, &lab).unwrap(), d);
        assert!(vertex_flow_to_decomposition(&cycle(4), &vlab(&[1, 1, -1, -1])).is_err());
    }
}
