//! Brute-force oracles and generators shared by the integration tests.
#![allow(dead_code)]

use decomp_core::{Graph, PositiveFormula};
use proptest::prelude::*;

/// Graphs on `1..=max_n` vertices with each pair present with probability 1/2.
pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Graphs on `1..=max_n` vertices with about `per_vertex · n` random edges.
pub fn sparse_graph_strategy(max_n: usize, per_vertex: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=per_vertex * n).prop_map(move |pairs| {
            let mut edges: Vec<(usize, usize)> =
                pairs.into_iter().filter(|(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
            edges.sort_unstable();
            edges.dedup();
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Monotone formulas with clause sizes in `min_len..=max_len`.
pub fn formula_strategy(
    max_vars: usize,
    max_clauses: usize,
    min_len: usize,
    max_len: usize,
) -> impl Strategy<Value = PositiveFormula> {
    (min_len.max(1)..=max_vars).prop_flat_map(move |nv| {
        let clause = proptest::sample::subsequence((0..nv).collect::<Vec<_>>(), min_len.max(1)..=max_len.min(nv));
        proptest::collection::vec(clause, 1..=max_clauses).prop_map(move |cs| PositiveFormula::new(nv, cs).unwrap())
    })
}

/// Connected graphs of minimum degree at least 2: a random graph, with
/// each deficient vertex joined to the next ones and consecutive
/// components linked.
pub fn connected_min_degree_two(max_n: usize, per_vertex: usize) -> impl Strategy<Value = Graph> {
    sparse_graph_strategy(max_n, per_vertex).prop_filter_map("needs 3 vertices", |g| {
        let n = g.n();
        if n < 3 {
            return None;
        }
        let mut edges: std::collections::BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
        let comps = decomp_core::graph::connected_components(&g);
        for w in comps.windows(2) {
            edges.insert((w[0][0].min(w[1][0]), w[0][0].max(w[1][0])));
        }
        for v in 0..n {
            let mut step = 1;
            while edges.iter().filter(|&&(a, b)| a == v || b == v).count() < 2 {
                let u = (v + step) % n;
                edges.insert((u.min(v), u.max(v)));
                step += 1;
            }
        }
        Some(Graph::new(n, edges).unwrap())
    })
}

/// All subsets `A ⊆ V` as bitmasks for which `ok(v, |N(v) ∩ A|)` holds at
/// every vertex; the first one found.
pub fn brute_subset(g: &Graph, ok: impl Fn(usize, usize) -> bool) -> Option<u32> {
    let n = g.n();
    let masks: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u)).collect();
    (0u32..1 << n).find(|&a| (0..n).all(|v| ok(v, (masks[v] & a).count_ones() as usize)))
}

pub fn brute_one_in_degree(g: &Graph) -> bool {
    brute_subset(g, |_, c| c == 1).is_some()
}

pub fn brute_nae(g: &Graph) -> bool {
    brute_subset(g, |v, c| c >= 1 && c < g.degree(v)).is_some()
}

pub fn brute_weighted(g: &Graph, w: &[i64]) -> bool {
    (0u32..1 << g.n()).any(|a| {
        g.vertices().all(|v| g.neighbors(v).iter().filter(|&&u| a >> u & 1 == 1).map(|&u| w[u]).sum::<i64>() == 1)
    })
}

/// Exhaustive search over labels in `±1..±(k-1)`; each constraint (a list
/// of variables that must sum to zero) is tested once its largest variable
/// is set.
pub fn brute_zero_sum_labels(vars: usize, constraints: &[Vec<usize>], k: i64) -> bool {
    let mut closing = vec![Vec::new(); vars];
    for (i, c) in constraints.iter().enumerate() {
        if let Some(&last) = c.iter().max() {
            closing[last].push(i);
        }
    }
    let values: Vec<i64> = (1..k).flat_map(|x| [x, -x]).collect();
    fn go(i: usize, x: &mut [i64], values: &[i64], closing: &[Vec<usize>], cs: &[Vec<usize>]) -> bool {
        if i == x.len() {
            return true;
        }
        for &val in values {
            x[i] = val;
            let ok = closing[i].iter().all(|&c| cs[c].iter().map(|&j| x[j]).sum::<i64>() == 0);
            if ok && go(i + 1, x, values, closing, cs) {
                return true;
            }
        }
        false
    }
    go(0, &mut vec![0; vars], &values, &closing, constraints)
}

pub fn brute_edge_flow(g: &Graph, k: i64) -> bool {
    // an isolated vertex has the empty sum and imposes nothing
    let cs: Vec<Vec<usize>> = g.vertices().map(|v| g.incident_edges(v).to_vec()).collect();
    brute_zero_sum_labels(g.m(), &cs, k)
}

pub fn brute_vertex_flow(g: &Graph, k: i64) -> bool {
    let cs: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    brute_zero_sum_labels(g.n(), &cs, k)
}

/// Largest matching size by recursion on the lowest vertex.
pub fn brute_max_matching(g: &Graph) -> usize {
    fn go(g: &Graph, free: u32) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(g, rest);
        for &w in g.neighbors(v) {
            if rest >> w & 1 == 1 {
                best = best.max(1 + go(g, rest & !(1 << w)));
            }
        }
        best
    }
    go(g, ((1u64 << g.n()) - 1) as u32)
}

/// Every hyperedge sees both colors under some coloring.
pub fn brute_two_colorable(num_vertices: usize, edges: &[Vec<usize>]) -> bool {
    (0u32..1 << num_vertices).any(|c| edges.iter().all(|e| e.iter().any(|&v| (c >> v & 1) != (c >> e[0] & 1))))
}
