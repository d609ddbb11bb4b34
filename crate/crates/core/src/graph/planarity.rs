//! Left-right planarity test (de Fraysseix–Rosenstiehl criterion in the
//! formulation of Brandes) with construction of a combinatorial embedding.
//!
//! The three phases are the usual ones: a DFS orientation computing lowpoints
//! and nesting depths, a second DFS that maintains the stack of conflict pairs
//! and fails as soon as the left-right constraints are contradictory, and a
//! final pass that resolves edge sides and writes the rotation system.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::Graph;

const NONE: usize = usize::MAX;

/// A rotation system: for every vertex, its neighbors in clockwise order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub rotation: Vec<Vec<usize>>,
}

impl Embedding {
    /// Number of faces traced by the rotation system.
    pub fn face_count(&self) -> usize {
        let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &w) in rot.iter().enumerate() {
                pos.insert((v, w), i);
            }
        }
        let mut visited: HashMap<(usize, usize), bool> = pos.keys().map(|&k| (k, false)).collect();
        let mut faces = 0;
        let keys: Vec<(usize, usize)> = {
            let mut k: Vec<_> = pos.keys().copied().collect();
            k.sort_unstable();
            k
        };
        for start in keys {
            if visited[&start] {
                continue;
            }
            faces += 1;
            let mut he = start;
            while !visited[&he] {
                visited.insert(he, true);
                let (v, w) = he;
                let rot = &self.rotation[w];
                let i = pos[&(w, v)];
                let prev = rot[(i + rot.len() - 1) % rot.len()];
                he = (w, prev);
            }
        }
        faces
    }

    /// Checks that the rotation system is consistent with `g` and has genus 0.
    pub fn is_planar_embedding_of(&self, g: &Graph) -> bool {
        if self.rotation.len() != g.n() {
            return false;
        }
        for v in g.vertices() {
            let mut rot = self.rotation[v].clone();
            rot.sort_unstable();
            if rot != g.neighbors(v) {
                return false;
            }
        }
        let comps = super::connected_components(g);
        let nontrivial: Vec<_> = comps.iter().filter(|c| c.len() > 1).collect();
        let vertices: usize = nontrivial.iter().map(|c| c.len()).sum();
        let expected = g.m() + 2 * nontrivial.len();
        self.face_count() + vertices == expected
    }
}

pub fn is_planar(g: &Graph) -> bool {
    LrPlanarity::new(g).run(false).is_some()
}

/// Planar embedding as a rotation system, or `None` for nonplanar graphs.
pub fn planar_embedding(g: &Graph) -> Option<Embedding> {
    LrPlanarity::new(g).run(true)
}

#[derive(Clone, Copy, Debug, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn single(e: usize) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrPlanarity<'a> {
    g: &'a Graph,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    roots: Vec<usize>,
    // per undirected edge id, after orientation
    tail: Vec<usize>,
    head: Vec<usize>,
    oriented: Vec<bool>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    lowpt_edge: Vec<usize>,
    reference: Vec<usize>,
    side: Vec<i64>,
    stack_bottom: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    stack: Vec<ConflictPair>,
}

impl<'a> LrPlanarity<'a> {
    fn new(g: &'a Graph) -> Self {
        let (n, m) = (g.n(), g.m());
        LrPlanarity {
            g,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            roots: Vec::new(),
            tail: vec![NONE; m],
            head: vec![NONE; m],
            oriented: vec![false; m],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            lowpt_edge: vec![NONE; m],
            reference: vec![NONE; m],
            side: vec![1; m],
            stack_bottom: vec![0; m],
            out_edges: vec![Vec::new(); n],
            stack: Vec::new(),
        }
    }

    fn run(mut self, embed: bool) -> Option<Embedding> {
        let (n, m) = (self.g.n(), self.g.m());
        if n > 2 && m > 3 * n - 6 {
            return None;
        }
        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..n {
            let depth = &self.nesting_depth;
            self.out_edges[v].sort_by_key(|&e| depth[e]);
        }
        for i in 0..self.roots.len() {
            if !self.test(self.roots[i]) {
                return None;
            }
        }
        if !embed {
            return Some(Embedding { rotation: Vec::new() });
        }
        Some(self.embed())
    }

    fn orient(&mut self, root: usize) {
        let g = self.g;
        let mut frames = vec![(root, 0usize)];
        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if frame.1 < g.degree(v) {
                let i = frame.1;
                frame.1 += 1;
                let w = g.neighbors(v)[i];
                let e = g.incident_edges(v)[i];
                if self.oriented[e] {
                    continue;
                }
                self.oriented[e] = true;
                self.tail[e] = v;
                self.head[e] = w;
                self.out_edges[v].push(e);
                self.lowpt[e] = self.height[v];
                self.lowpt2[e] = self.height[v];
                if self.height[w] == NONE {
                    self.parent_edge[w] = e;
                    self.height[w] = self.height[v] + 1;
                    frames.push((w, 0));
                } else {
                    self.lowpt[e] = self.height[w];
                    self.finish_edge(e);
                }
            } else {
                frames.pop();
                let pe = self.parent_edge[v];
                if pe != NONE {
                    self.finish_edge(pe);
                }
            }
        }
    }

    /// Nesting depth of `e` and lowpoint update of the parent edge of its tail.
    fn finish_edge(&mut self, e: usize) {
        let v = self.tail[e];
        self.nesting_depth[e] = 2 * self.lowpt[e] as i64;
        if self.lowpt2[e] < self.height[v] {
            self.nesting_depth[e] += 1;
        }
        let pe = self.parent_edge[v];
        if pe == NONE {
            return;
        }
        if self.lowpt[e] < self.lowpt[pe] {
            self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
            self.lowpt[pe] = self.lowpt[e];
        } else if self.lowpt[e] > self.lowpt[pe] {
            self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
        } else {
            self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
        }
    }

    fn test(&mut self, root: usize) -> bool {
        let mut frames = vec![(root, 0usize)];
        loop {
            let Some(&(v, idx)) = frames.last() else {
                return true;
            };
            if idx < self.out_edges[v].len() {
                let ei = self.out_edges[v][idx];
                self.stack_bottom[ei] = self.stack.len();
                let w = self.head[ei];
                if self.parent_edge[w] == ei {
                    frames.push((w, 0));
                    continue;
                }
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval::single(ei),
                });
                if !self.integrate(v, idx, ei) {
                    return false;
                }
                frames.last_mut().unwrap().1 += 1;
            } else {
                frames.pop();
                let e = self.parent_edge[v];
                if e != NONE {
                    self.remove_back_edges(e);
                    let parent = self.tail[e];
                    let pidx = frames.last().unwrap().1;
                    if !self.integrate(parent, pidx, e) {
                        return false;
                    }
                    frames.last_mut().unwrap().1 += 1;
                }
            }
        }
    }

    /// Integrates the return edges of `ei`, the `idx`-th outgoing edge of `v`.
    fn integrate(&mut self, v: usize, idx: usize, ei: usize) -> bool {
        if self.lowpt[ei] < self.height[v] {
            let e = self.parent_edge[v];
            if idx == 0 {
                self.lowpt_edge[e] = self.lowpt_edge[ei];
            } else if !self.add_constraints(ei, e) {
                return false;
            }
        }
        true
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => NONE,
        }
    }

    fn set_ref(&mut self, at: Option<usize>, to: Option<usize>) {
        if let Some(a) = at {
            self.reference[a] = to.unwrap_or(NONE);
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("nonempty right interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qlow] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn follow(&self, h: usize) -> Option<usize> {
        let r = self.reference[h];
        (r != NONE).then_some(r)
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.head[h] != u {
                    break;
                }
                p.left.high = self.follow(h);
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low.unwrap_or(NONE);
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.head[h] != u {
                    break;
                }
                p.right.high = self.follow(h);
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.reference[r] = p.left.low.unwrap_or(NONE);
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("e has a return edge");
            let (hl, hr) = (top.left.high, top.right.high);
            let pick = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
            self.reference[e] = pick.unwrap_or(NONE);
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = vec![e];
        let mut cur = e;
        while self.reference[cur] != NONE {
            cur = self.reference[cur];
            chain.push(cur);
        }
        // the last element has a resolved side; fold back towards e
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.reference[a] = NONE;
        }
        self.side[e]
    }

    fn embed(mut self) -> Embedding {
        let n = self.g.n();
        for e in 0..self.g.m() {
            let s = self.sign(e);
            self.nesting_depth[e] *= s;
        }
        let mut rot = Rotation::new(n);
        for v in 0..n {
            let depth = &self.nesting_depth;
            self.out_edges[v].sort_by_key(|&e| depth[e]);
            let mut prev = None;
            for &e in &self.out_edges[v] {
                let w = self.head[e];
                rot.add_cw(v, w, prev);
                prev = Some(w);
            }
        }
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        for &root in &self.roots {
            let mut frames = vec![(root, 0usize)];
            while let Some(frame) = frames.last_mut() {
                let v = frame.0;
                if frame.1 == self.out_edges[v].len() {
                    frames.pop();
                    continue;
                }
                let ei = self.out_edges[v][frame.1];
                frame.1 += 1;
                let w = self.head[ei];
                if self.parent_edge[w] == ei {
                    rot.add_first(w, v);
                    left_ref[v] = w;
                    right_ref[v] = w;
                    frames.push((w, 0));
                } else if self.side[ei] == 1 {
                    rot.add_cw(w, v, Some(right_ref[w]));
                } else {
                    rot.add_ccw(w, v, Some(left_ref[w]));
                    left_ref[w] = v;
                }
            }
        }
        rot.into_embedding()
    }
}

/// Doubly linked cyclic neighbor orders under construction.
struct Rotation {
    links: HashMap<(usize, usize), (usize, usize)>, // (v, w) -> (cw, ccw)
    first: Vec<usize>,
}

impl Rotation {
    fn new(n: usize) -> Self {
        Rotation {
            links: HashMap::new(),
            first: vec![NONE; n],
        }
    }

    fn add_cw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        match reference {
            None => {
                self.links.insert((v, w), (w, w));
                self.first[v] = w;
            }
            Some(r) => {
                let cw_ref = self.links[&(v, r)].0;
                self.links.get_mut(&(v, r)).unwrap().0 = w;
                self.links.insert((v, w), (cw_ref, r));
                self.links.get_mut(&(v, cw_ref)).unwrap().1 = w;
            }
        }
    }

    fn add_ccw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        match reference {
            None => self.add_cw(v, w, None),
            Some(r) => {
                let ccw_ref = self.links[&(v, r)].1;
                self.add_cw(v, w, Some(ccw_ref));
                if self.first[v] == r {
                    self.first[v] = w;
                }
            }
        }
    }

    fn add_first(&mut self, v: usize, w: usize) {
        if self.first[v] == NONE {
            self.add_cw(v, w, None);
        } else {
            let f = self.first[v];
            self.add_ccw(v, w, Some(f));
        }
    }

    fn into_embedding(self) -> Embedding {
        let rotation = (0..self.first.len())
            .map(|v| {
                let mut order = Vec::new();
                let start = self.first[v];
                if start == NONE {
                    return order;
                }
                let mut w = start;
                loop {
                    order.push(w);
                    w = self.links[&(v, w)].0;
                    if w == start {
                        break;
                    }
                }
                order
            })
            .collect();
        Embedding { rotation }
    }
}
