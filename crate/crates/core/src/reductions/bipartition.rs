//! Triangle gadgets for NAE 3SAT against minimum edge deletion to a
//! bipartite graph, and an exact solver for the latter.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Builder, GadgetInstance};
use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::sat::PositiveFormula;

/// Vertex `r_x` per variable, then `c_x` per clause and member in clause
/// order. `c_x` joins `r_x` and the other two vertices of its clause.
pub fn gen_bipartition_instance(f: &PositiveFormula) -> Result<GadgetInstance> {
    if let Some(c) = f.clauses().iter().position(|c| c.len() != 3) {
        return Err(precondition(format!("clause {c} does not have 3 members")));
    }
    let mut b = Builder::default();
    let r: Vec<usize> = (0..f.num_vars()).map(|x| b.vertex("r", format!("x{x}"))).collect();
    for (c, clause) in f.clauses().iter().enumerate() {
        let cs: Vec<usize> = clause.iter().map(|&x| b.vertex("c", format!("c{c}/x{x}"))).collect();
        for (&x, &v) in clause.iter().zip(&cs) {
            b.edge(r[x], v);
        }
        b.edge(cs[0], cs[1]);
        b.edge(cs[0], cs[2]);
        b.edge(cs[1], cs[2]);
    }
    let params = serde_json::json!({
        "reduction": "bipartition",
        "num_vars": f.num_vars(),
        "num_clauses": f.num_clauses(),
    });
    b.finish(None, params)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDeletion {
    pub count: usize,
    /// Edge ids whose removal leaves a bipartite graph, ascending.
    pub edges: Vec<usize>,
}

/// `|E| - maxcut`, by branch and bound over 2-colorings in BFS order. The
/// bound adds, for every uncolored vertex, the smaller of its edge counts
/// into the two colored sides.
pub fn min_edge_deletion_bipartition(g: &Graph) -> EdgeDeletion {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut first_of_comp = vec![false; n];
    let mut seen = vec![false; n];
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        first_of_comp[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    let mut bb = Bb {
        g,
        order,
        first_of_comp,
        side: vec![None; n],
        into: vec![[0; 2]; n],
        lb: 0,
        best: g.m() + 1,
        best_side: vec![false; n],
    };
    bb.go(0, 0);
    let edges: Vec<usize> = (0..g.m())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            bb.best_side[u] == bb.best_side[v]
        })
        .collect();
    EdgeDeletion { count: edges.len(), edges }
}

struct Bb<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    first_of_comp: Vec<bool>,
    side: Vec<Option<bool>>,
    /// Edges from each vertex into sides false / true.
    into: Vec<[usize; 2]>,
    /// Sum over uncolored vertices of `min(into)`.
    lb: usize,
    best: usize,
    best_side: Vec<bool>,
}

impl Bb<'_> {
    fn go(&mut self, at: usize, cost: usize) {
        if cost + self.lb >= self.best {
            return;
        }
        if at == self.order.len() {
            self.best = cost;
            self.best_side = self.side.iter().map(|s| s.unwrap_or(false)).collect();
            return;
        }
        let v = self.order[at];
        let [c0, c1] = self.into[v];
        let choices: &[bool] = if self.first_of_comp[v] {
            &[false]
        } else if c0 <= c1 {
            &[false, true]
        } else {
            &[true, false]
        };
        for &s in choices {
            let own = self.into[v][s as usize];
            self.lb -= c0.min(c1);
            self.place(v, s, true);
            self.go(at + 1, cost + own);
            self.place(v, s, false);
            self.lb += c0.min(c1);
        }
    }

    fn place(&mut self, v: usize, s: bool, on: bool) {
        self.side[v] = on.then_some(s);
        for &w in self.g.neighbors(v) {
            if self.side[w].is_some() {
                continue;
            }
            let before = self.into[w][0].min(self.into[w][1]);
            if on {
                self.into[w][s as usize] += 1;
            } else {
                self.into[w][s as usize] -= 1;
            }
            let after = self.into[w][0].min(self.into[w][1]);
            self.lb = self.lb + after - before;
        }
    }
}
