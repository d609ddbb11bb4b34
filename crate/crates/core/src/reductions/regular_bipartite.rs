//! `r`-regular bipartite gadgets whose 1-in-Degree decompositions encode
//! 1-in-`r` assignments, and the padding that widens the clauses of a cubic
//! formula to `r` members.

use super::{Builder, GadgetInstance};
use crate::decomp::{verify_one_in_degree, Decomposition};
use crate::error::{precondition, Error, Result};
use crate::graph::Graph;
use crate::sat::{eval, Assignment, Mode, PositiveFormula};

fn require_cubic(f: &PositiveFormula) -> Result<()> {
    if let Some(c) = f.clauses().iter().position(|c| c.len() != 3) {
        return Err(precondition(format!("clause {c} does not have 3 members")));
    }
    if let Some(x) = (0..f.num_vars()).find(|&x| f.occurrences(x).len() != 3) {
        return Err(precondition(format!("variable {x} does not occur exactly 3 times")));
    }
    Ok(())
}

/// `r(r-2)` disjoint copies of `f` plus `(r-3)s` forcing groups. Group `j`
/// has variables `α_1..α_{r-1}, ε_1..ε_{r-1}` and clauses
/// `ε_i ∨ α_1 ∨ … ∨ α_{r-1}` and `α_1 ∨ ε_1 ∨ … ∨ ε_{r-1}`; any 1-in-`r`
/// assignment makes `α_1` the only true one. The free occurrences of the
/// other group variables pad the copied clauses, copied clause `q` taking
/// free slots `q, q + Q, q + 2Q, …` (`Q` copied clauses), so no clause gets
/// one variable twice. Group variables end with exactly `r` occurrences;
/// copied variables keep their 3, so only `r = 3` yields an `r`-regular
/// formula.
pub fn pad_formula(f: &PositiveFormula, r: usize) -> Result<PositiveFormula> {
    require_cubic(f)?;
    if r < 3 {
        return Err(precondition(format!("r = {r} is below 3")));
    }
    let nv = f.num_vars();
    let s = f.num_clauses();
    let copies = r * (r - 2);
    let groups = (r - 3) * s;
    let mut clauses: Vec<Vec<usize>> = Vec::new();
    for t in 0..copies {
        for c in f.clauses() {
            clauses.push(c.iter().map(|&x| t * nv + x).collect());
        }
    }
    let base = copies * nv;
    let alpha = |j: usize, k: usize| base + j * 2 * (r - 1) + (k - 1);
    let eps = |j: usize, i: usize| base + j * 2 * (r - 1) + (r - 1) + (i - 1);
    let mut slots = Vec::new();
    let mut forcing = Vec::new();
    for j in 0..groups {
        for i in 1..r {
            let mut c = vec![eps(j, i)];
            c.extend((1..r).map(|k| alpha(j, k)));
            forcing.push(c);
        }
        let mut c = vec![alpha(j, 1)];
        c.extend((1..r).map(|i| eps(j, i)));
        forcing.push(c);
        slots.extend((2..r).map(|k| alpha(j, k)));
        for i in 1..r {
            slots.extend(std::iter::repeat(eps(j, i)).take(r - 2));
        }
    }
    let q = clauses.len();
    debug_assert_eq!(slots.len(), q * (r - 3));
    for (idx, clause) in clauses.iter_mut().enumerate() {
        clause.extend((0..r - 3).map(|t| slots[idx + t * q]));
    }
    clauses.extend(forcing);
    PositiveFormula::new(base + groups * 2 * (r - 1), clauses)
}

/// Vertex ids of one variable's block, indexed `[k][j]` (and `[i]`).
#[derive(Clone, Debug)]
struct VarBlock {
    x: Vec<Vec<usize>>,
    beta: Vec<Vec<Vec<usize>>>,
    delta: Vec<Vec<usize>>,
    eps: Vec<Vec<usize>>,
    zeta: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct RegularBipartiteGadget {
    pub instance: GadgetInstance,
    pub formula: PositiveFormula,
    pub r: usize,
    blocks: Vec<VarBlock>,
    /// `c^k` ids, `[clause][k]`.
    clause_vertices: Vec<Vec<usize>>,
}

impl RegularBipartiteGadget {
    pub fn graph(&self) -> &Graph {
        &self.instance.graph
    }

    /// Vertex `x^k_j` of variable `x`.
    pub fn x_vertex(&self, x: usize, k: usize, j: usize) -> usize {
        self.blocks[x].x[k][j]
    }

    /// Whether membership of `x^k_j` in `A` is constant over `j` for every
    /// variable and level.
    pub fn x_levels_constant(&self, d: &Decomposition) -> bool {
        self.blocks
            .iter()
            .all(|b| b.x.iter().all(|row| row.iter().all(|&v| d.contains(v) == d.contains(row[0]))))
    }
}

/// Vertex families per variable, in order: `x^k_j`, `α^k_{i,j}`,
/// `β^k_{i,j}`, `δ^k_{1,j}`, `ε^k_j`, `ζ_j`; then `c^k` per clause. The
/// `i`-th clause containing `x` is joined at slot `j = i` on every level.
pub fn gen_regular_bipartite(fp: &PositiveFormula, r: usize) -> Result<RegularBipartiteGadget> {
    if r < 3 {
        return Err(precondition(format!("r = {r} is below 3")));
    }
    if let Some(c) = fp.clauses().iter().position(|c| c.len() != r) {
        return Err(precondition(format!("clause {c} does not have {r} members")));
    }
    let occ = fp.occurrence_lists();
    if let Some(x) = (0..fp.num_vars()).find(|&x| occ[x].len() != r) {
        return Err(precondition(format!("variable {x} does not occur exactly {r} times")));
    }
    let mut b = Builder::default();
    let mut blocks = Vec::with_capacity(fp.num_vars());
    for x in 0..fp.num_vars() {
        let xs = grid(r, r, |k, j| b.vertex("x", format!("x{x}/k{k}/j{j}")));
        let alpha: Vec<Vec<Vec<usize>>> = grid(r, r, |k, j| {
            (0..r - 2).map(|i| b.vertex("alpha", format!("x{x}/k{k}/j{j}/i{i}"))).collect()
        });
        let beta = grid(r, r, |k, j| {
            (0..r - 1).map(|i| b.vertex("beta", format!("x{x}/k{k}/j{j}/i{i}"))).collect()
        });
        let delta = grid(r, r, |k, j| b.vertex("delta", format!("x{x}/k{k}/j{j}")));
        let eps = grid(r, r, |k, j| b.vertex("epsilon", format!("x{x}/k{k}/j{j}")));
        let zeta: Vec<usize> = (0..r).map(|j| b.vertex("zeta", format!("x{x}/j{j}"))).collect();
        for k in 0..r {
            for j in 0..r {
                for &a in &alpha[k][j] {
                    b.edge(xs[k][j], a);
                    for &bt in &beta[k][j] {
                        b.edge(a, bt);
                    }
                }
                for &bt in &beta[k][j] {
                    b.edge(bt, delta[k][j]);
                    b.edge(eps[k][j], bt);
                }
                b.edge(delta[k][j], xs[k][(j + 1) % r]);
                b.edge(eps[k][j], zeta[j]);
            }
        }
        blocks.push(VarBlock { x: xs, beta, delta, eps, zeta });
    }
    let clause_vertices: Vec<Vec<usize>> = (0..fp.num_clauses())
        .map(|c| (0..r).map(|k| b.vertex("c", format!("c{c}/k{k}"))).collect())
        .collect();
    for (x, list) in occ.iter().enumerate() {
        for (slot, &c) in list.iter().enumerate() {
            for k in 0..r {
                b.edge(clause_vertices[c][k], blocks[x].x[k][slot]);
            }
        }
    }
    let params = serde_json::json!({
        "reduction": "regular-bipartite",
        "r": r,
        "num_vars": fp.num_vars(),
        "num_clauses": fp.num_clauses(),
    });
    let instance = b.finish(None, params)?;
    Ok(RegularBipartiteGadget { instance, formula: fp.clone(), r, blocks, clause_vertices })
}

fn grid<T>(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Vec<Vec<T>> {
    (0..rows).map(|k| (0..cols).map(|j| f(k, j)).collect()).collect()
}

/// `x^k_j ∈ A` iff `Γ(x)`; `β^k_{0,j} ∈ A` iff not `Γ(x)`; `ζ_j ∈ A` iff
/// `Γ(x)`; `δ^k` and `ε^k, c^k` swap membership on the last level; `α` and
/// the other `β` stay out.
pub fn decomposition_from_assignment(gr: &RegularBipartiteGadget, a: &Assignment) -> Result<Decomposition> {
    if !eval(&gr.formula, a, Mode::OneInK)? {
        return Err(precondition("assignment is not 1-in-r satisfying"));
    }
    let r = gr.r;
    let mut set = Vec::new();
    for (x, blk) in gr.blocks.iter().enumerate() {
        let t = a.value(x);
        for k in 0..r {
            let last = k == r - 1;
            for j in 0..r {
                if t {
                    set.push(blk.x[k][j]);
                } else {
                    set.push(blk.beta[k][j][0]);
                }
                if last {
                    set.push(blk.eps[k][j]);
                } else {
                    set.push(blk.delta[k][j]);
                }
            }
        }
        if t {
            set.extend(&blk.zeta);
        }
    }
    for cv in &gr.clause_vertices {
        set.push(cv[r - 1]);
    }
    let d = Decomposition::new(set);
    if !verify_one_in_degree(gr.graph(), &d)? {
        return Err(Error::InternalAssertion("forward decomposition fails verification".into()));
    }
    Ok(d)
}

/// `Γ(x) = [x^1_0 ∈ A]`.
pub fn assignment_from_decomposition(gr: &RegularBipartiteGadget, d: &Decomposition) -> Result<Assignment> {
    if !verify_one_in_degree(gr.graph(), d)? {
        return Err(precondition("not a 1-in-Degree decomposition of the gadget"));
    }
    let a = Assignment::new(gr.blocks.iter().map(|b| d.contains(b.x[1][0])).collect());
    if !eval(&gr.formula, &a, Mode::OneInK)? {
        return Err(Error::InternalAssertion("extracted assignment is not 1-in-r satisfying".into()));
    }
    Ok(a)
}
