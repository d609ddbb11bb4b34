//! Simple-cycle enumeration (Johnson's circuit search run on the symmetric
//! orientation of the graph) used to certify the absence of cycles whose
//! length is congruent to 2 mod 4.

use serde::Serialize;

use super::Graph;

pub const DEFAULT_CYCLE_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleClassReport {
    pub has_bad_cycle: bool,
    /// Vertex sequence of a simple cycle of length 2 mod 4 (closing edge implied).
    pub witness: Option<Vec<usize>>,
    pub cycles_enumerated: u64,
    /// True iff every simple cycle of the graph was visited.
    pub exhausted: bool,
}

pub fn has_cycle_2_mod_4(g: &Graph) -> CycleClassReport {
    has_cycle_2_mod_4_capped(g, DEFAULT_CYCLE_CAP)
}

/// Enumerates simple cycles until one of length 2 mod 4 shows up or `cap`
/// cycles have been seen.
pub fn has_cycle_2_mod_4_capped(g: &Graph, cap: u64) -> CycleClassReport {
    let mut search = Search {
        g,
        start: 0,
        blocked: vec![false; g.n()],
        block_map: vec![Vec::new(); g.n()],
        stack: Vec::new(),
        count: 0,
        cap,
        witness: None,
        halted: false,
    };
    for s in g.vertices() {
        search.start = s;
        for v in s..g.n() {
            search.blocked[v] = false;
            search.block_map[v].clear();
        }
        search.circuit(s);
        if search.halted {
            break;
        }
    }
    CycleClassReport {
        has_bad_cycle: search.witness.is_some(),
        witness: search.witness,
        cycles_enumerated: search.count,
        exhausted: !search.halted,
    }
}

struct Search<'a> {
    g: &'a Graph,
    start: usize,
    blocked: Vec<bool>,
    block_map: Vec<Vec<usize>>,
    stack: Vec<usize>,
    count: u64,
    cap: u64,
    witness: Option<Vec<usize>>,
    halted: bool,
}

impl Search<'_> {
    fn circuit(&mut self, v: usize) -> bool {
        let mut found = false;
        self.stack.push(v);
        self.blocked[v] = true;
        for &w in self.g.neighbors(v) {
            if self.halted {
                break;
            }
            if w < self.start {
                continue;
            }
            if w == self.start {
                // 2-circuits of the symmetric orientation still count for blocking
                found = true;
                let len = self.stack.len();
                if len >= 3 && self.stack[1] < self.stack[len - 1] {
                    self.report();
                }
            } else if !self.blocked[w] && self.circuit(w) {
                found = true;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for &w in self.g.neighbors(v) {
                if w >= self.start && !self.block_map[w].contains(&v) {
                    self.block_map[w].push(v);
                }
            }
        }
        self.stack.pop();
        found
    }

    fn unblock(&mut self, v: usize) {
        let mut pending = vec![v];
        while let Some(u) = pending.pop() {
            if !self.blocked[u] {
                continue;
            }
            self.blocked[u] = false;
            pending.append(&mut self.block_map[u]);
        }
    }

    fn report(&mut self) {
        if self.count == self.cap {
            self.halted = true;
            return;
        }
        self.count += 1;
        if self.stack.len() % 4 == 2 {
            self.witness = Some(self.stack.clone());
            self.halted = true;
        }
    }
}
