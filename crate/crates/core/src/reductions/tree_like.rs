//! Clause trees: saturate the incidence graph with planar clause-clause
//! edges, then keep a spanning tree of them.

use std::collections::VecDeque;

use crate::error::{precondition, Error, Result};
use crate::graph::{connected_components, is_planar, Graph};
use crate::sat::{incidence_graph, validate_cubic_planar, PositiveFormula, TreeLikeInstance};

/// Requires a cubic formula with planar incidence graph.
pub fn make_tree_like(f: &PositiveFormula) -> Result<TreeLikeInstance> {
    let report = validate_cubic_planar(f);
    if !report.valid {
        return Err(precondition(report.diagnostics.join("; ")));
    }
    make_tree_like_relaxed(f)
}

/// Same construction, only requiring a planar incidence graph in which every
/// variable occurs somewhere. Used for small non-cubic test instances.
pub fn make_tree_like_relaxed(f: &PositiveFormula) -> Result<TreeLikeInstance> {
    let nv = f.num_vars();
    let nc = f.num_clauses();
    if let Some(x) = (0..nv).find(|&x| f.occurrences(x).is_empty()) {
        return Err(precondition(format!("variable {x} occurs in no clause")));
    }
    let inc = incidence_graph(f).graph;
    if !is_planar(&inc) {
        return Err(precondition("incidence graph is not planar"));
    }
    // pairs in lexicographic order; keep each one that leaves the graph planar
    let mut edges: Vec<(usize, usize)> = inc.edges().to_vec();
    let mut clause_edges = Vec::new();
    for a in 0..nc {
        for b in a + 1..nc {
            edges.push((nv + a, nv + b));
            let g = Graph::new(nv + nc, edges.iter().copied()).expect("new clause pair");
            if is_planar(&g) {
                clause_edges.push((a, b));
            } else {
                edges.pop();
            }
        }
    }
    let clause_graph = Graph::new(nc, clause_edges.iter().copied()).expect("simple");
    if nc > 0 && connected_components(&clause_graph).len() != 1 {
        return Err(Error::InternalAssertion(format!(
            "maximal planar clause augmentation left the clause vertices disconnected: {:?}",
            connected_components(&clause_graph)
        )));
    }
    let mut tree = Vec::new();
    let mut seen = vec![false; nc];
    if nc > 0 {
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(c) = queue.pop_front() {
            for &d in clause_graph.neighbors(c) {
                if !seen[d] {
                    seen[d] = true;
                    tree.push((c, d));
                    queue.push_back(d);
                }
            }
        }
    }
    TreeLikeInstance::new(f.clone(), tree)
        .map_err(|e| Error::InternalAssertion(format!("spanning tree rejected: {e}")))
}
