//! Planar (3,4)-semiregular gadgets whose zero-sum 3-flows encode 1-in-3
//! assignments of a tree-like formula.
//!
//! Every vertex of degree 3 sees one `±2` edge; inside a connected block of
//! degree-3 vertices the sign of that edge is shared, so each gadget has a
//! type `τ = ±1`. Variable gadgets carry `τ = +1` for true. Clause gadgets
//! are all of one type, fixed to `-1` by labeling the anchor edges `-2`.

use std::collections::HashMap;

use serde::Serialize;

use super::{Builder, GadgetInstance};
use crate::error::{precondition, Error, Result};
use crate::flow::{verify_zero_sum, EdgeLabeling};
use crate::graph::{is_planar, planar_embedding, Graph};
use crate::sat::{eval, Assignment, Mode, TreeLikeInstance};

/// Budget of planarity checks for the pairing fallback.
const PAIRING_BUDGET: usize = 4096;

/// Witness label of an edge: `coef · τ(var)`, with `τ(None) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Rule {
    coef: i64,
    var: Option<usize>,
}

impl Rule {
    const ONE: Rule = Rule { coef: 1, var: None };

    fn times(self, k: i64) -> Rule {
        Rule { coef: self.coef * k, var: self.var }
    }

    fn eval(self, a: &Assignment) -> i64 {
        match self.var {
            Some(x) if !a.value(x) => -self.coef,
            _ => self.coef,
        }
    }
}

/// A generated gadget plus what the witness maps need: per-edge witness
/// rules, one external edge per variable gadget and the clause anchors.
#[derive(Clone, Debug)]
pub struct ZeroSumGadget {
    pub instance: GadgetInstance,
    pub source: TreeLikeInstance,
    rules: Vec<Rule>,
    probes: Vec<usize>,
    anchors: Vec<usize>,
}

impl ZeroSumGadget {
    pub fn graph(&self) -> &Graph {
        &self.instance.graph
    }

    /// Edge ids of the clause anchor edges `w b_c`, by clause.
    pub fn anchor_edges(&self) -> &[usize] {
        &self.anchors
    }

    /// One edge leaving each variable gadget, by variable.
    pub fn variable_edges(&self) -> &[usize] {
        &self.probes
    }
}

struct ZsBuilder {
    b: Builder,
    rules: HashMap<(usize, usize), Rule>,
}

impl ZsBuilder {
    fn edge(&mut self, u: usize, v: usize, r: Rule) {
        self.b.edge(u, v);
        self.rules.insert((u.min(v), u.max(v)), r);
    }

    /// `I(u)`: vertices `u,a,b,c,d`, edges `ua ub ac ad bc bd cd`. With the
    /// external edge at `u` labeled `2σ`, the completion is `ac = bd = 2σ`
    /// and `-σ` elsewhere.
    fn i_gadget(&mut self, source: &str, sigma: Rule) -> usize {
        let [u, a, b, c, d] = ["I.u", "I.a", "I.b", "I.c", "I.d"].map(|r| self.b.vertex(r, source));
        self.edge(u, a, sigma.times(-1));
        self.edge(u, b, sigma.times(-1));
        self.edge(a, c, sigma.times(2));
        self.edge(a, d, sigma.times(-1));
        self.edge(b, c, sigma.times(-1));
        self.edge(b, d, sigma.times(2));
        self.edge(c, d, sigma.times(-1));
        u
    }
}

/// Builds the gadget for `t`. Free vertices of each gadget are paired with
/// neighbors in the rotation order of a planar embedding of the tree-like
/// graph, which keeps the result planar; the result is re-checked and, if
/// needed, gadget orientations are searched.
pub fn gen_zero_sum_instance(t: &TreeLikeInstance) -> Result<ZeroSumGadget> {
    let f = t.formula();
    if let Some(x) = (0..f.num_vars()).find(|&x| f.occurrences(x).is_empty()) {
        return Err(precondition(format!("variable {x} occurs in no clause")));
    }
    if let Some(c) = f.clauses().iter().position(|c| c.len() < 3) {
        return Err(precondition(format!("clause {c} has fewer than 3 members")));
    }
    let h = t.combined_graph();
    let emb = planar_embedding(&h).ok_or_else(|| precondition("tree-like graph is not planar"))?;
    let mut flips = vec![false; h.n()];
    let first = build(t, &h, &emb.rotation, &flips)?;
    if is_planar(first.graph()) {
        return Ok(first);
    }
    let mut checks = 1;
    if let Some(found) = search_flips(t, &h, &emb.rotation, &mut flips, 0, &mut checks)? {
        return Ok(found);
    }
    Err(Error::PairingExhausted(format!(
        "{checks} orientation choices over {} gadgets were nonplanar",
        h.n()
    )))
}

fn search_flips(
    t: &TreeLikeInstance,
    h: &Graph,
    rotation: &[Vec<usize>],
    flips: &mut Vec<bool>,
    at: usize,
    checks: &mut usize,
) -> Result<Option<ZeroSumGadget>> {
    if at == flips.len() || *checks >= PAIRING_BUDGET {
        return Ok(None);
    }
    flips[at] = true;
    let g = build(t, h, rotation, flips)?;
    *checks += 1;
    if is_planar(g.graph()) {
        return Ok(Some(g));
    }
    if let Some(found) = search_flips(t, h, rotation, flips, at + 1, checks)? {
        return Ok(Some(found));
    }
    flips[at] = false;
    search_flips(t, h, rotation, flips, at + 1, checks)
}

fn build(t: &TreeLikeInstance, h: &Graph, rotation: &[Vec<usize>], flips: &[bool]) -> Result<ZeroSumGadget> {
    let f = t.formula();
    let nv = f.num_vars();
    let nc = f.num_clauses();
    let mut zb = ZsBuilder { b: Builder::default(), rules: HashMap::new() };
    let order = |g: usize| -> Vec<usize> {
        let mut r = rotation[g].clone();
        if flips[g] {
            r.reverse();
        }
        r
    };
    // port[g][h-neighbor] = gadget vertex joined toward that neighbor
    let mut port: Vec<HashMap<usize, usize>> = vec![HashMap::new(); h.n()];

    for x in 0..nv {
        let tau = Rule { coef: 1, var: Some(x) };
        let nbrs = order(x);
        let d = nbrs.len();
        if d == 1 {
            let u = zb.i_gadget(&format!("x{x}/1"), tau);
            port[x].insert(nbrs[0], u);
            continue;
        }
        let mut vs = Vec::with_capacity(d);
        let mut ws = Vec::with_capacity(d);
        for i in 1..=d {
            vs.push(zb.b.vertex("var.v", format!("x{x}/{i}")));
            ws.push(zb.b.vertex("var.w", format!("x{x}/{i}")));
        }
        for i in 0..d {
            zb.edge(vs[i], ws[i], tau.times(-1));
            zb.edge(ws[i], vs[(i + 1) % d], tau.times(-1));
        }
        for (i, &v) in vs.iter().enumerate() {
            let u = zb.i_gadget(&format!("x{x}/{}", i + 1), tau);
            zb.edge(u, v, tau.times(2));
        }
        for (i, &g) in nbrs.iter().enumerate() {
            port[x].insert(g, ws[i]);
        }
    }

    // (clause, important w, next cycle vertex, variable)
    let mut important = Vec::new();
    let mut anchor_pairs = Vec::with_capacity(nc);
    let mut b_of = Vec::with_capacity(nc);
    for c in 0..nc {
        let g = nv + c;
        let nbrs = order(g);
        let len = nbrs.len() + 1;
        let mut vs = Vec::with_capacity(len);
        let mut ws = Vec::with_capacity(len);
        for i in 1..=len {
            vs.push(zb.b.vertex("clause.v", format!("c{c}/{i}")));
            ws.push(zb.b.vertex("clause.w", format!("c{c}/{i}")));
        }
        for i in 0..len {
            zb.edge(vs[i], ws[i], Rule::ONE);
            let next = vs[(i + 1) % len];
            if i < nbrs.len() && nbrs[i] < nv {
                important.push((c, i, ws[i], next, nbrs[i]));
            } else {
                zb.edge(ws[i], next, Rule::ONE);
            }
        }
        for (i, &v) in vs.iter().enumerate() {
            let u = zb.i_gadget(&format!("c{c}/{}", i + 1), Rule::ONE.times(-1));
            zb.edge(u, v, Rule { coef: -2, var: None });
        }
        let b = zb.b.vertex("b_c", format!("c{c}"));
        zb.edge(b, ws[len - 1], Rule { coef: -2, var: None });
        anchor_pairs.push((b, ws[len - 1]));
        b_of.push(b);
        for (i, &nb) in nbrs.iter().enumerate() {
            port[g].insert(nb, ws[i]);
        }
    }

    let mut probe_pairs = vec![None; nv];
    for &(a, b) in h.edges() {
        let (pa, pb) = (port[a][&b], port[b][&a]);
        if a < nv {
            zb.edge(pa, pb, Rule { coef: 2, var: Some(a) });
            probe_pairs[a].get_or_insert((pa, pb));
        } else {
            zb.edge(pa, pb, Rule { coef: -2, var: None });
        }
    }
    for &(c, _, w, _, x) in &important {
        zb.edge(b_of[c], w, Rule { coef: -2, var: Some(x) });
    }
    for &(c, i, w, next, _) in &important {
        let src = format!("c{c}/w{}", i + 1);
        let fv = zb.b.vertex("f_v", src.clone());
        let up = zb.i_gadget(&format!("{src}/+"), Rule::ONE);
        let um = zb.i_gadget(&format!("{src}/-"), Rule::ONE.times(-1));
        zb.edge(w, fv, Rule::ONE.times(-1));
        zb.edge(fv, next, Rule::ONE);
        zb.edge(fv, up, Rule { coef: 2, var: None });
        zb.edge(fv, um, Rule { coef: -2, var: None });
    }

    let params = serde_json::json!({
        "reduction": "zero-sum",
        "k": 3,
        "num_vars": nv,
        "num_clauses": nc,
        "gamma": (0..nc).map(|c| t.gamma(c)).collect::<Vec<_>>(),
        "clause_tree_edges": t.clause_tree_edges(),
    });
    let ZsBuilder { b, rules } = zb;
    let instance = b.finish(None, params)?;
    let g = &instance.graph;
    let id = |(u, v): (usize, usize)| g.edge_id(u, v).expect("recorded edge");
    let edge_rules = g.edges().iter().map(|e| rules[e]).collect();
    let probes = probe_pairs.into_iter().map(|p| id(p.expect("every variable has an edge"))).collect();
    let anchors = anchor_pairs.into_iter().map(id).collect();
    Ok(ZeroSumGadget { instance, source: t.clone(), rules: edge_rules, probes, anchors })
}

/// Labels every edge from `a`: anchors `-2`, variable gadgets of type
/// `+1` exactly for true variables, clause gadgets of type `-1`.
pub fn witness_flow_from_assignment(gz: &ZeroSumGadget, a: &Assignment) -> Result<EdgeLabeling> {
    let f = gz.source.formula();
    if f.clauses().iter().any(|c| c.len() != 3) {
        return Err(precondition("witness construction needs 3-element clauses"));
    }
    if !eval(f, a, Mode::OneInK)? {
        return Err(precondition("assignment is not 1-in-3 satisfying"));
    }
    let labels = EdgeLabeling { labels: gz.rules.iter().map(|r| r.eval(a)).collect() };
    if !verify_zero_sum(gz.graph(), &labels, 3)? {
        return Err(Error::InternalAssertion("witness flow fails the zero-sum check".into()));
    }
    Ok(labels)
}

/// Reads `Γ(x)` off the edge leaving the gadget of `x` after normalizing
/// signs so that the anchors carry `-2`.
pub fn assignment_from_flow(gz: &ZeroSumGadget, lab: &EdgeLabeling) -> Result<Assignment> {
    if !verify_zero_sum(gz.graph(), lab, 3)? {
        return Err(precondition("labeling is not a zero-sum 3-flow"));
    }
    let sign = match gz.anchors.first() {
        Some(&e) if lab.labels[e] > 0 => -1,
        _ => 1,
    };
    if gz.anchors.iter().any(|&e| sign * lab.labels[e] != -2) {
        return Err(Error::InternalAssertion("anchor edges do not share the label -2".into()));
    }
    let a = Assignment::new(gz.probes.iter().map(|&e| sign * lab.labels[e] == 2).collect());
    if !eval(gz.source.formula(), &a, Mode::OneInK)? {
        return Err(Error::InternalAssertion("extracted assignment is not 1-in-3 satisfying".into()));
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroSumStructureReport {
    pub planar: bool,
    /// Every degree is 3 or 4.
    pub semiregular_3_4: bool,
    /// Each clause has exactly one `b_c`, and it has degree 4.
    pub one_b_c_per_clause: bool,
    /// Degree-4 vertices built for each clause (`b_c`, important vertices
    /// and `f_v` vertices).
    pub degree4_per_clause: Vec<usize>,
    /// Degree-4 vertices not built for any clause.
    pub degree4_elsewhere: usize,
    /// Every `I(u)` copy has 5 vertices and `u` has one outside neighbor.
    pub i_gadgets_ok: bool,
    pub provenance_total: bool,
}

impl ZeroSumStructureReport {
    pub fn all(&self) -> bool {
        self.planar
            && self.semiregular_3_4
            && self.one_b_c_per_clause
            && self.degree4_elsewhere == 0
            && self.i_gadgets_ok
            && self.provenance_total
    }
}

pub fn zero_sum_structure(gz: &ZeroSumGadget) -> ZeroSumStructureReport {
    let gi = &gz.instance;
    let g = &gi.graph;
    let nc = gz.source.formula().num_clauses();
    let clause_of = |source: &str| -> Option<usize> {
        let rest = source.strip_prefix('c')?;
        rest.split('/').next()?.parse().ok()
    };
    let mut degree4_per_clause = vec![0; nc];
    let mut degree4_elsewhere = 0;
    let mut b_count = vec![0; nc];
    let mut b_ok = true;
    for p in &gi.provenance {
        let d = g.degree(p.vertex);
        let c = clause_of(&p.source);
        if d == 4 {
            match c {
                Some(c) => degree4_per_clause[c] += 1,
                None => degree4_elsewhere += 1,
            }
        }
        if p.role == "b_c" {
            match c {
                Some(c) => b_count[c] += 1,
                None => b_ok = false,
            }
            b_ok &= d == 4;
        }
    }
    let mut groups: HashMap<&str, Vec<usize>> = HashMap::new();
    for p in gi.provenance.iter().filter(|p| p.role.starts_with("I.")) {
        groups.entry(&p.source).or_default().push(p.vertex);
    }
    let i_gadgets_ok = groups.values().all(|vs| {
        // vertices of one source come in blocks of 5, u first
        vs.len() % 5 == 0
            && vs.chunks(5).all(|blk| {
                let inside = |w: usize| blk.contains(&w);
                let u = blk[0];
                gi.provenance[u].role == "I.u"
                    && g.neighbors(u).iter().filter(|&&w| !inside(w)).count() == 1
                    && blk[1..].iter().all(|&v| g.neighbors(v).iter().all(|&w| inside(w)))
            })
    });
    ZeroSumStructureReport {
        planar: is_planar(g),
        semiregular_3_4: g.vertices().all(|v| matches!(g.degree(v), 3 | 4)),
        one_b_c_per_clause: b_ok && b_count.iter().all(|&k| k == 1),
        degree4_per_clause,
        degree4_elsewhere,
        i_gadgets_ok,
        provenance_total: gi.provenance_is_total(),
    }
}
