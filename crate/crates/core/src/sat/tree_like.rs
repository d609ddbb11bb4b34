use serde::{Deserialize, Serialize};

use super::{incidence_graph, PositiveFormula};
use crate::error::{precondition, Result};
use crate::graph::{connected_components, is_planar, Graph};

/// A formula with clause-clause edges forming a spanning tree on the clause
/// vertices, such that incidence graph plus tree stays planar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTreeLike", into = "RawTreeLike")]
pub struct TreeLikeInstance {
    formula: PositiveFormula,
    clause_tree_edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawTreeLike {
    formula: PositiveFormula,
    clause_tree_edges: Vec<(usize, usize)>,
}

impl TryFrom<RawTreeLike> for TreeLikeInstance {
    type Error = crate::Error;
    fn try_from(raw: RawTreeLike) -> Result<Self> {
        TreeLikeInstance::new(raw.formula, raw.clause_tree_edges)
    }
}

impl From<TreeLikeInstance> for RawTreeLike {
    fn from(t: TreeLikeInstance) -> Self {
        RawTreeLike { formula: t.formula, clause_tree_edges: t.clause_tree_edges }
    }
}

impl TreeLikeInstance {
    pub fn new(formula: PositiveFormula, mut clause_tree_edges: Vec<(usize, usize)>) -> Result<Self> {
        let c = formula.num_clauses();
        for e in &mut clause_tree_edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        clause_tree_edges.sort_unstable();
        let tree = Graph::new(c, clause_tree_edges.iter().copied())?;
        if c > 0 && (tree.m() != c - 1 || connected_components(&tree).len() != 1) {
            return Err(precondition("clause edges do not form a spanning tree"));
        }
        let t = TreeLikeInstance { formula, clause_tree_edges };
        if !is_planar(&t.combined_graph()) {
            return Err(precondition("incidence graph plus clause tree is not planar"));
        }
        Ok(t)
    }

    pub fn formula(&self) -> &PositiveFormula {
        &self.formula
    }

    /// Sorted `(min, max)` clause pairs.
    pub fn clause_tree_edges(&self) -> &[(usize, usize)] {
        &self.clause_tree_edges
    }

    /// Degree of clause `c` in the clause tree.
    pub fn gamma(&self, c: usize) -> usize {
        self.clause_tree_edges
            .iter()
            .filter(|&&(a, b)| a == c || b == c)
            .count()
    }

    /// Tree neighbors of clause `c`, ascending.
    pub fn tree_neighbors(&self, c: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .clause_tree_edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == c {
                    Some(b)
                } else if b == c {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Incidence graph (variables first, then clauses) plus the tree edges.
    pub fn combined_graph(&self) -> Graph {
        let nv = self.formula.num_vars();
        let inc = incidence_graph(&self.formula).graph;
        let edges = inc
            .edges()
            .iter()
            .copied()
            .chain(self.clause_tree_edges.iter().map(|&(a, b)| (nv + a, nv + b)));
        Graph::new(inc.n(), edges).expect("tree edges join distinct clause vertices")
    }
}
