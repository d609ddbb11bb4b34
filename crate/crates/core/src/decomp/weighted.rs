use super::Decomposition;
use crate::graph::VertexWeightedGraph;
use crate::stats::SolveStats;

const FREE: u8 = 2;

pub fn solve_one_in_degree_weighted(wg: &VertexWeightedGraph) -> Option<Decomposition> {
    solve_one_in_degree_weighted_with_stats(wg).0
}

/// Backtracking over `f ∈ {0,1}^V` for `Σ_{u∈N(v)} f(u)w(u) = 1` at every
/// `v`. Each constraint keeps the interval of sums still reachable from its
/// undecided neighbors; a value that would push 1 out of that interval is
/// ruled out, which both prunes and forces. Zero-weight vertices never matter
/// and are left out of `A`.
pub fn solve_one_in_degree_weighted_with_stats(
    wg: &VertexWeightedGraph,
) -> (Option<Decomposition>, SolveStats) {
    let g = &wg.graph;
    let mut s = Weighted {
        wg,
        value: vec![FREE; g.n()],
        sum: vec![0; g.n()],
        lo: vec![0; g.n()],
        hi: vec![0; g.n()],
        open: vec![0; g.n()],
        trail: Vec::new(),
        stats: SolveStats::default(),
    };
    for v in g.vertices() {
        for &u in g.neighbors(v) {
            let w = wg.weight(u);
            if w != 0 {
                s.open[v] += 1;
                if w < 0 {
                    s.lo[v] += w;
                } else {
                    s.hi[v] += w;
                }
            }
        }
        if s.lo[v] > 1 || s.hi[v] < 1 {
            return (None, s.stats);
        }
    }
    if !s.propagate_all() || !s.search() {
        return (None, s.stats);
    }
    let f: Vec<bool> = s.value.iter().map(|&x| x == 1).collect();
    (Some(Decomposition::from_indicator(&f)), s.stats)
}

struct Weighted<'a> {
    wg: &'a VertexWeightedGraph,
    value: Vec<u8>,
    // sum[v]: weight of A-neighbors decided so far
    sum: Vec<i64>,
    // lo/hi: sums of negative/positive weights over undecided neighbors
    lo: Vec<i64>,
    hi: Vec<i64>,
    // undecided neighbors of nonzero weight
    open: Vec<usize>,
    trail: Vec<usize>,
    stats: SolveStats,
}

impl Weighted<'_> {
    fn set(&mut self, u: usize, x: u8) {
        let w = self.wg.weight(u);
        self.value[u] = x;
        self.trail.push(u);
        for &v in self.wg.graph.neighbors(u) {
            self.open[v] -= 1;
            if w < 0 {
                self.lo[v] -= w;
            } else {
                self.hi[v] -= w;
            }
            if x == 1 {
                self.sum[v] += w;
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let u = self.trail.pop().unwrap();
            let w = self.wg.weight(u);
            let x = self.value[u];
            for &v in self.wg.graph.neighbors(u) {
                self.open[v] += 1;
                if w < 0 {
                    self.lo[v] += w;
                } else {
                    self.hi[v] += w;
                }
                if x == 1 {
                    self.sum[v] -= w;
                }
            }
            self.value[u] = FREE;
        }
    }

    /// Whether 1 stays reachable at `v` if undecided neighbor `u` takes `x`.
    fn allows(&self, v: usize, u: usize, x: u8) -> bool {
        let w = self.wg.weight(u);
        let (lo, hi) = if w < 0 { (self.lo[v] - w, self.hi[v]) } else { (self.lo[v], self.hi[v] - w) };
        let base = self.sum[v] + if x == 1 { w } else { 0 };
        base + lo <= 1 && 1 <= base + hi
    }

    /// Forces every value ruled out at some neighbor constraint of `u`.
    fn assign(&mut self, u: usize, x: u8) -> bool {
        let mut queue = vec![(u, x)];
        while let Some((u, x)) = queue.pop() {
            if self.value[u] != FREE {
                if self.value[u] != x {
                    return false;
                }
                continue;
            }
            self.set(u, x);
            for &v in self.wg.graph.neighbors(u) {
                if !self.check(v, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    /// Interval test at `v`, queueing forced values of its undecided neighbors.
    fn check(&mut self, v: usize, queue: &mut Vec<(usize, u8)>) -> bool {
        if self.sum[v] + self.lo[v] > 1 || self.sum[v] + self.hi[v] < 1 {
            return false;
        }
        for &u in self.wg.graph.neighbors(v) {
            if self.value[u] != FREE || self.wg.weight(u) == 0 {
                continue;
            }
            match (self.allows(v, u, 1), self.allows(v, u, 0)) {
                (true, true) => {}
                (false, false) => return false,
                (one, _) => {
                    self.stats.propagations += 1;
                    queue.push((u, one as u8));
                }
            }
        }
        true
    }

    fn propagate_all(&mut self) -> bool {
        let mut queue = Vec::new();
        for v in self.wg.graph.vertices() {
            if !self.check(v, &mut queue) {
                return false;
            }
        }
        queue.into_iter().all(|(u, x)| self.assign(u, x))
    }

    fn search(&mut self) -> bool {
        let g = &self.wg.graph;
        let pick = g
            .vertices()
            .filter(|&v| self.open[v] > 0)
            .min_by_key(|&v| (self.open[v], v));
        let Some(v) = pick else {
            return true;
        };
        let u = *g
            .neighbors(v)
            .iter()
            .find(|&&u| self.value[u] == FREE && self.wg.weight(u) != 0)
            .expect("open constraint has an undecided neighbor");
        for x in [1, 0] {
            self.stats.nodes += 1;
            let mark = self.trail.len();
            if self.assign(u, x) && self.search() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}
