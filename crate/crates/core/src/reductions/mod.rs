//! Generators for the reduction gadgets, with per-vertex provenance and the
//! maps that carry witnesses across each reduction.

mod bipartition;
mod regular_bipartite;
mod three_partition;
mod tree_like;
mod zero_sum;

pub use bipartition::{gen_bipartition_instance, min_edge_deletion_bipartition, EdgeDeletion};
pub use regular_bipartite::{
    assignment_from_decomposition, decomposition_from_assignment, gen_regular_bipartite, pad_formula,
    RegularBipartiteGadget,
};
pub use three_partition::{
    coloring_from_partition, gen_three_partition_graph, partition_from_coloring, ThreePartitionGadget,
};
pub use tree_like::{make_tree_like, make_tree_like_relaxed};
pub use zero_sum::{
    assignment_from_flow, gen_zero_sum_instance, witness_flow_from_assignment, zero_sum_structure, ZeroSumGadget,
    ZeroSumStructureReport,
};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::io::GraphFile;
use crate::graph::{Graph, VertexWeightedGraph};

/// Where a gadget vertex came from: its role inside the gadget and the
/// clause, variable or index it was built for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub vertex: usize,
    pub role: String,
    pub source: String,
}

/// A generated graph (weighted or not) with one provenance record per
/// vertex and the parameters it was built with.
#[derive(Clone, Debug, PartialEq)]
pub struct GadgetInstance {
    pub graph: Graph,
    pub weights: Option<Vec<i64>>,
    pub provenance: Vec<Provenance>,
    pub params: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct GadgetFile {
    #[serde(flatten)]
    graph: GraphFile,
    provenance: Vec<Provenance>,
    params: serde_json::Value,
}

impl GadgetInstance {
    pub fn weighted(&self) -> Option<VertexWeightedGraph> {
        let w = self.weights.clone()?;
        Some(VertexWeightedGraph::new(self.graph.clone(), w).expect("weights cover every vertex"))
    }

    /// Vertex ids whose role is `role`, ascending.
    pub fn vertices_with_role(&self, role: &str) -> Vec<usize> {
        self.provenance.iter().filter(|p| p.role == role).map(|p| p.vertex).collect()
    }

    /// Each vertex has exactly one record.
    pub fn provenance_is_total(&self) -> bool {
        let mut seen = vec![0usize; self.graph.n()];
        for p in &self.provenance {
            if p.vertex >= seen.len() {
                return false;
            }
            seen[p.vertex] += 1;
        }
        seen.iter().all(|&c| c == 1)
    }

    pub fn to_json(&self) -> String {
        let mut graph = GraphFile::from_graph(&self.graph);
        graph.weights = self.weights.clone();
        let file = GadgetFile { graph, provenance: self.provenance.clone(), params: self.params.clone() };
        serde_json::to_string_pretty(&file).expect("gadget serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GadgetFile = serde_json::from_str(text)?;
        let graph = file.graph.graph()?;
        if let Some(w) = &file.graph.weights {
            VertexWeightedGraph::new(graph.clone(), w.clone())?;
        }
        Ok(GadgetInstance {
            graph,
            weights: file.graph.weights,
            provenance: file.provenance,
            params: file.params,
        })
    }
}

/// Incremental vertex / edge collection used by every generator.
#[derive(Default)]
pub(crate) struct Builder {
    provenance: Vec<Provenance>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    pub(crate) fn vertex(&mut self, role: &str, source: impl Into<String>) -> usize {
        let vertex = self.provenance.len();
        self.provenance.push(Provenance { vertex, role: role.into(), source: source.into() });
        vertex
    }

    pub(crate) fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    pub(crate) fn finish(self, weights: Option<Vec<i64>>, params: serde_json::Value) -> Result<GadgetInstance> {
        let graph = Graph::new(self.provenance.len(), self.edges)?;
        Ok(GadgetInstance { graph, weights, provenance: self.provenance, params })
    }
}
