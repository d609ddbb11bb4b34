use super::Decomposition;
use crate::graph::{connected_components, Graph};
use crate::stats::SolveStats;

const FREE: u8 = 2;

pub fn solve_nae(g: &Graph) -> Option<Decomposition> {
    solve_nae_with_stats(g).0
}

/// Backtracking over part labels with unit propagation: once a vertex's
/// neighborhood has a single undecided member and still misses one part,
/// that member is forced into the missing part. Branches on the unsatisfied
/// vertex with the fewest undecided neighbors. Components are independent,
/// and the first decision in each is not retried with the parts swapped.
pub fn solve_nae_with_stats(g: &Graph) -> (Option<Decomposition>, SolveStats) {
    let mut s = Nae {
        g,
        side: vec![FREE; g.n()],
        count: vec![[0; 2]; g.n()],
        free: g.vertices().map(|v| g.degree(v)).collect(),
        trail: Vec::new(),
        stats: SolveStats::default(),
    };
    if g.vertices().any(|v| g.degree(v) < 2) {
        return (None, s.stats);
    }
    for comp in connected_components(g) {
        if !s.search(&comp, true) {
            return (None, s.stats);
        }
        // unconstrained leftovers go to B
        for &v in &comp {
            if s.side[v] == FREE {
                s.side[v] = 0;
            }
        }
    }
    let f: Vec<bool> = s.side.iter().map(|&x| x == 1).collect();
    (Some(Decomposition::from_indicator(&f)), s.stats)
}

struct Nae<'a> {
    g: &'a Graph,
    side: Vec<u8>,
    // count[v][p]: neighbors of v already in part p (0 = B, 1 = A)
    count: Vec<[usize; 2]>,
    free: Vec<usize>,
    trail: Vec<usize>,
    stats: SolveStats,
}

impl Nae<'_> {
    fn unsatisfied(&self, v: usize) -> bool {
        self.count[v][0] == 0 || self.count[v][1] == 0
    }

    fn set(&mut self, x: usize, p: u8) {
        self.side[x] = p;
        self.trail.push(x);
        for &v in self.g.neighbors(x) {
            self.free[v] -= 1;
            self.count[v][p as usize] += 1;
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let p = self.side[x] as usize;
            for &v in self.g.neighbors(x) {
                self.free[v] += 1;
                self.count[v][p] -= 1;
            }
            self.side[x] = FREE;
        }
    }

    /// Sets `x` to `p` and runs propagation to a fixpoint; false on conflict.
    fn assign(&mut self, x: usize, p: u8) -> bool {
        let mut queue = vec![(x, p)];
        while let Some((x, p)) = queue.pop() {
            if self.side[x] != FREE {
                if self.side[x] != p {
                    return false;
                }
                continue;
            }
            self.set(x, p);
            for &v in self.g.neighbors(x) {
                if !self.unsatisfied(v) {
                    continue;
                }
                match self.free[v] {
                    0 => return false,
                    1 => {
                        if self.count[v][0] == 0 && self.count[v][1] == 0 {
                            return false;
                        }
                        let missing = if self.count[v][1] == 0 { 1 } else { 0 };
                        let last = *self
                            .g
                            .neighbors(v)
                            .iter()
                            .find(|&&u| self.side[u] == FREE)
                            .expect("one free neighbor");
                        self.stats.propagations += 1;
                        queue.push((last, missing));
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn search(&mut self, comp: &[usize], root: bool) -> bool {
        let mut pick = None;
        for &v in comp {
            if self.unsatisfied(v) && pick.is_none_or(|b: usize| self.free[v] < self.free[b]) {
                pick = Some(v);
            }
        }
        let Some(v) = pick else {
            return true;
        };
        let x = *self
            .g
            .neighbors(v)
            .iter()
            .find(|&&u| self.side[u] == FREE)
            .expect("unsatisfied vertex keeps a free neighbor");
        let first = if self.count[v][1] == 0 { 1 } else { 0 };
        let tries: &[u8] = if root { &[first] } else { &[first, 1 - first] };
        for &p in tries {
            self.stats.nodes += 1;
            let mark = self.trail.len();
            if self.assign(x, p) && self.search(comp, false) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}
