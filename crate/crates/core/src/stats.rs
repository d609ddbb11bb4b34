use serde::Serialize;

/// Search counters reported by the exact solvers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Branching decisions taken.
    pub nodes: u64,
    /// Values fixed by propagation rather than branching.
    pub propagations: u64,
}

impl SolveStats {
    pub fn absorb(&mut self, other: SolveStats) {
        self.nodes += other.nodes;
        self.propagations += other.propagations;
    }
}
