//! Dancing-links exact cover, and 1-in-Degree as the instance whose items
//! are the vertices and whose option `u` covers `N(u)`.

use std::collections::{HashMap, HashSet};

use super::Decomposition;
use crate::graph::{connected_components, Graph};
use crate::stats::SolveStats;

/// Exact cover over items `0..num_items`.
///
/// At every node the uncovered items are split into connected components
/// (items sharing a remaining option), which are solved one after another.
/// Inside a component the search picks the item with the fewest remaining
/// options (lowest id on ties) and tries its options in ascending option id.
/// A component's residual problem depends only on its set of uncovered
/// items, since an option survives iff none of its items is covered, so
/// outcomes are cached by that set.
pub struct ExactCover {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    // column header of a node; for headers, themselves
    col: Vec<usize>,
    // option id of a node
    row: Vec<usize>,
    size: Vec<usize>,
    // header still linked
    active: Vec<bool>,
    // first node of each selected option, in selection order
    trail: Vec<usize>,
    failed: HashSet<Vec<usize>>,
    solved: HashMap<Vec<usize>, Vec<usize>>,
    stats: SolveStats,
}

const ROOT: usize = 0;

impl ExactCover {
    /// `options[i]` lists the items option `i` covers; empty options are ignored.
    pub fn new(num_items: usize, options: &[Vec<usize>]) -> Self {
        let heads = num_items + 1;
        let mut x = ExactCover {
            left: (0..heads).map(|i| if i == 0 { num_items } else { i - 1 }).collect(),
            right: (0..heads).map(|i| if i == num_items { 0 } else { i + 1 }).collect(),
            up: (0..heads).collect(),
            down: (0..heads).collect(),
            col: (0..heads).collect(),
            row: vec![usize::MAX; heads],
            size: vec![0; heads],
            active: vec![true; heads],
            trail: Vec::new(),
            failed: HashSet::new(),
            solved: HashMap::new(),
            stats: SolveStats::default(),
        };
        for (r, items) in options.iter().enumerate() {
            let mut first = None;
            for &item in items {
                let c = item + 1;
                let node = x.col.len();
                x.col.push(c);
                x.row.push(r);
                // append at the bottom of column c
                x.up.push(x.up[c]);
                x.down.push(c);
                let last = x.up[c];
                x.down[last] = node;
                x.up[c] = node;
                x.size[c] += 1;
                match first {
                    None => {
                        first = Some(node);
                        x.left.push(node);
                        x.right.push(node);
                    }
                    Some(f) => {
                        let tail = x.left[f];
                        x.left.push(tail);
                        x.right.push(f);
                        x.right[tail] = node;
                        x.left[f] = node;
                    }
                }
            }
        }
        x
    }

    /// First cover found, as ascending option ids.
    pub fn solve(mut self) -> (Option<Vec<usize>>, SolveStats) {
        let mut all = Vec::new();
        let mut c = self.right[ROOT];
        while c != ROOT {
            all.push(c);
            c = self.right[c];
        }
        let found = self.search(&all);
        let stats = self.stats;
        if found {
            let mut rows: Vec<usize> = self.trail.iter().map(|&r| self.row[r]).collect();
            rows.sort_unstable();
            (Some(rows), stats)
        } else {
            (None, stats)
        }
    }

    fn cover(&mut self, c: usize) {
        self.active[c] = false;
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.col[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                self.size[self.col[j]] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
        self.active[c] = true;
    }

    /// Takes the option of node `r` and covers all its items.
    fn select(&mut self, r: usize) {
        self.cover(self.col[r]);
        let mut j = self.right[r];
        while j != r {
            self.cover(self.col[j]);
            j = self.right[j];
        }
        self.trail.push(r);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let r = self.trail.pop().expect("above mark");
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.col[j]);
                j = self.left[j];
            }
            self.uncover(self.col[r]);
        }
    }

    /// Connected components of the given uncovered items, each sorted, in
    /// order of their smallest item.
    fn components(&self, items: &[usize]) -> Vec<Vec<usize>> {
        let mut comp_of: HashMap<usize, usize> = HashMap::new();
        let mut comps = Vec::new();
        for &s in items {
            if comp_of.contains_key(&s) {
                continue;
            }
            let id = comps.len();
            comp_of.insert(s, id);
            let mut comp = vec![s];
            let mut at = 0;
            while at < comp.len() {
                let c = comp[at];
                at += 1;
                let mut i = self.down[c];
                while i != c {
                    let mut j = self.right[i];
                    while j != i {
                        let d = self.col[j];
                        if let std::collections::hash_map::Entry::Vacant(e) = comp_of.entry(d) {
                            e.insert(id);
                            comp.push(d);
                        }
                        j = self.right[j];
                    }
                    i = self.down[i];
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Covers every item of `region` that is still uncovered, leaving the
    /// selections on the trail, or restores the state and returns false.
    fn search(&mut self, region: &[usize]) -> bool {
        let items: Vec<usize> = region.iter().copied().filter(|&c| self.active[c]).collect();
        if items.is_empty() {
            return true;
        }
        let comps = self.components(&items);
        if comps.len() == 1 {
            return self.search_component(items);
        }
        let mark = self.trail.len();
        for comp in comps {
            if !self.search_component(comp) {
                self.undo_to(mark);
                return false;
            }
        }
        true
    }

    fn search_component(&mut self, items: Vec<usize>) -> bool {
        if self.failed.contains(&items) {
            return false;
        }
        if let Some(rows) = self.solved.get(&items).cloned() {
            for r in rows {
                self.select(r);
            }
            return true;
        }
        let mut best = items[0];
        for &c in &items[1..] {
            if self.size[c] < self.size[best] {
                best = c;
            }
        }
        if self.size[best] == 1 {
            self.stats.propagations += 1;
        }
        let mark = self.trail.len();
        let mut r = self.down[best];
        while r != best {
            self.stats.nodes += 1;
            self.select(r);
            if self.search(&items) {
                self.solved.insert(items, self.trail[mark..].to_vec());
                return true;
            }
            self.undo_to(mark);
            r = self.down[r];
        }
        self.failed.insert(items);
        false
    }
}

pub fn solve_one_in_degree(g: &Graph) -> Option<Decomposition> {
    solve_one_in_degree_with_stats(g).0
}

/// Each connected component is an independent exact-cover instance. In a
/// bipartite component the options of one side only cover the other side, so
/// the two sides are solved separately.
pub fn solve_one_in_degree_with_stats(g: &Graph) -> (Option<Decomposition>, SolveStats) {
    let mut stats = SolveStats::default();
    let mut a = Vec::new();
    for comp in connected_components(g) {
        let groups = match two_coloring(g, &comp) {
            Some((left, right)) => vec![(left.clone(), right.clone()), (right, left)],
            None => vec![(comp.clone(), comp)],
        };
        for (chooser, covered) in groups {
            // both lists are sorted, so local ids keep the global order
            let local = |v: usize| covered.binary_search(&v).expect("neighbor is covered");
            let options: Vec<Vec<usize>> = chooser
                .iter()
                .map(|&u| g.neighbors(u).iter().map(|&w| local(w)).collect())
                .collect();
            let (rows, s) = ExactCover::new(covered.len(), &options).solve();
            stats.absorb(s);
            match rows {
                Some(rows) => a.extend(rows.into_iter().map(|r| chooser[r])),
                None => return (None, stats),
            }
        }
    }
    (Some(Decomposition::new(a)), stats)
}

/// Sides of a connected vertex set (sorted), or `None` if it has an odd cycle.
fn two_coloring(g: &Graph, comp: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    if comp.len() < 2 {
        return None;
    }
    let mut side = std::collections::HashMap::from([(comp[0], false)]);
    let mut stack = vec![comp[0]];
    while let Some(v) = stack.pop() {
        let s = side[&v];
        for &w in g.neighbors(v) {
            match side.get(&w) {
                Some(&t) if t == s => return None,
                Some(_) => {}
                None => {
                    side.insert(w, !s);
                    stack.push(w);
                }
            }
        }
    }
    let (left, right) = comp.iter().partition(|v| !side[v]);
    Some((left, right))
}
