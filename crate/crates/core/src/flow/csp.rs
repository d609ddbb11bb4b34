//! Finite-domain search for integer vectors in `{±1, …, ±(k-1)}` whose sums
//! over given index sets are all zero. Each sum constraint is kept
//! generalized-arc-consistent with prefix/suffix reachable-sum tables.

use crate::stats::SolveStats;

/// Bit `i` of a domain stands for `value_of(i)`; values are ordered
/// `+1, -1, +2, -2, …`, so trying bits low to high is "smaller magnitude
/// first, positive sign first".
type Domain = u64;

pub(crate) struct ZeroSumCsp {
    k: i64,
    num_vars: usize,
    constraints: Vec<Vec<usize>>,
    // constraints each variable takes part in
    watch: Vec<Vec<usize>>,
    // split on magnitude before sign when k = 3
    magnitude_first: bool,
    pub stats: SolveStats,
}

fn value_of(bit: u32) -> i64 {
    let m = (bit / 2 + 1) as i64;
    if bit % 2 == 0 {
        m
    } else {
        -m
    }
}

impl ZeroSumCsp {
    pub fn new(k: i64, num_vars: usize, constraints: Vec<Vec<usize>>) -> Self {
        assert!((2..=32).contains(&k), "label bound out of range");
        let mut watch = vec![Vec::new(); num_vars];
        for (c, vars) in constraints.iter().enumerate() {
            for &x in vars {
                watch[x].push(c);
            }
        }
        ZeroSumCsp {
            k,
            num_vars,
            constraints,
            watch,
            magnitude_first: k == 3,
            stats: SolveStats::default(),
        }
    }

    fn full(&self) -> Domain {
        (1u64 << (2 * (self.k - 1))) - 1
    }

    pub fn solve(&mut self) -> Option<Vec<i64>> {
        let mut dom = vec![self.full(); self.num_vars];
        let all: Vec<usize> = (0..self.constraints.len()).collect();
        if !self.propagate(&mut dom, all) {
            return None;
        }
        if !self.search(&mut dom) {
            return None;
        }
        Some(dom.iter().map(|&d| value_of(d.trailing_zeros())).collect())
    }

    fn search(&mut self, dom: &mut Vec<Domain>) -> bool {
        // smallest domain, lowest id
        let pick = (0..self.num_vars)
            .filter(|&x| dom[x].count_ones() > 1)
            .min_by_key(|&x| (dom[x].count_ones(), x));
        let Some(x) = pick else {
            return true;
        };
        let d = dom[x];
        let mut parts = Vec::new();
        if self.magnitude_first && d & 0b0011 != 0 && d & 0b1100 != 0 {
            parts.push(d & 0b1100);
            parts.push(d & 0b0011);
        } else {
            let mut rest = d;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                parts.push(bit);
                rest ^= bit;
            }
        }
        for part in parts {
            self.stats.nodes += 1;
            let saved = dom.clone();
            dom[x] = part;
            if self.propagate(dom, self.watch[x].clone()) && self.search(dom) {
                return true;
            }
            *dom = saved;
        }
        false
    }

    fn propagate(&mut self, dom: &mut [Domain], seed: Vec<usize>) -> bool {
        let mut queued = vec![false; self.constraints.len()];
        let mut queue = std::collections::VecDeque::new();
        for c in seed {
            if !queued[c] {
                queued[c] = true;
                queue.push_back(c);
            }
        }
        while let Some(c) = queue.pop_front() {
            queued[c] = false;
            let Some(changed) = self.revise(c, dom) else {
                return false;
            };
            for x in changed {
                self.stats.propagations += 1;
                for &c2 in &self.watch[x] {
                    if c2 != c && !queued[c2] {
                        queued[c2] = true;
                        queue.push_back(c2);
                    }
                }
            }
        }
        true
    }

    /// Drops unsupported values from the variables of constraint `c`.
    /// Returns the variables whose domains shrank, or `None` on a wipe-out.
    fn revise(&self, c: usize, dom: &mut [Domain]) -> Option<Vec<usize>> {
        let vars = &self.constraints[c];
        let d = vars.len();
        if d == 0 {
            return Some(Vec::new());
        }
        let w = (self.k - 1) as usize;
        let off = d * w;
        let width = 2 * off + 1;
        // prefix[i] / suffix[i]: sums attainable by vars[..i] / vars[i..]
        let step = |from: &[bool], domain: Domain| {
            let mut to = vec![false; width];
            for (s, _) in from.iter().enumerate().filter(|(_, &b)| b) {
                let mut rest = domain;
                while rest != 0 {
                    let bit = rest.trailing_zeros();
                    rest &= rest - 1;
                    let t = s as i64 + value_of(bit);
                    if t >= 0 && (t as usize) < width {
                        to[t as usize] = true;
                    }
                }
            }
            to
        };
        let mut zero = vec![false; width];
        zero[off] = true;
        let mut prefix = vec![zero.clone()];
        for &x in vars {
            let next = step(prefix.last().unwrap(), dom[x]);
            prefix.push(next);
        }
        if !prefix[d][off] {
            return None;
        }
        let mut suffix = vec![zero; d + 1];
        for i in (0..d).rev() {
            suffix[i] = step(&suffix[i + 1], dom[vars[i]]);
        }
        let mut changed = Vec::new();
        for i in 0..d {
            let x = vars[i];
            let mut keep: Domain = 0;
            let mut rest = dom[x];
            while rest != 0 {
                let bit = rest.trailing_zeros();
                rest &= rest - 1;
                let a = value_of(bit);
                // need s + a + t = 0 with s from prefix[i], t from suffix[i+1]
                // (both tables are offset by `off`)
                let supported = prefix[i].iter().enumerate().any(|(s, &ps)| {
                    if !ps {
                        return false;
                    }
                    let t = 2 * off as i64 - s as i64 - a;
                    t >= 0 && (t as usize) < width && suffix[i + 1][t as usize]
                });
                if supported {
                    keep |= 1 << bit;
                }
            }
            if keep == 0 {
                return None;
            }
            if keep != dom[x] {
                dom[x] = keep;
                changed.push(x);
            }
        }
        Some(changed)
    }
}
