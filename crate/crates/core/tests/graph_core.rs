use decomp_core::graph::{
    euler_tour, has_cycle_2_mod_4, has_cycle_2_mod_4_capped, is_bipartite, is_planar, planar_embedding,
};
use decomp_core::Graph;
use proptest::prelude::*;
use serde::Deserialize;

#[derive(Deserialize)]
struct PlanarityCase {
    n: usize,
    edges: Vec<(usize, usize)>,
    planar: bool,
}

#[test]
fn planarity_matches_reference_fixtures() {
    let text = include_str!("fixtures/planarity_cases.json");
    let cases: Vec<PlanarityCase> = serde_json::from_str(text).unwrap();
    assert!(cases.len() > 900);
    for (i, case) in cases.iter().enumerate() {
        let g = Graph::new(case.n, case.edges.iter().copied()).unwrap();
        assert_eq!(is_planar(&g), case.planar, "case {i}");
        if case.planar {
            let emb = planar_embedding(&g).unwrap();
            assert!(emb.is_planar_embedding_of(&g), "case {i}: embedding has wrong genus");
        }
        // Euler bounds are necessary conditions
        if case.planar && g.n() >= 3 {
            assert!(g.m() <= 3 * g.n() - 6);
            if is_bipartite(&g).is_some() {
                assert!(g.m() <= 2 * g.n() - 4);
            }
        }
    }
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

/// 2-coloring by trying all 2^n colorings.
fn brute_bipartite(g: &Graph) -> bool {
    (0u32..1 << g.n()).any(|mask| g.edges().iter().all(|&(u, v)| (mask >> u & 1) != (mask >> v & 1)))
}

/// Some vertex subset S with |S| = 2 mod 4 spans a Hamiltonian cycle of G[S]
/// (bitmask path DP from the smallest member of S).
fn brute_bad_cycle(g: &Graph) -> bool {
    let n = g.n();
    for set in 0u32..1 << n {
        let size = set.count_ones() as usize;
        if size < 6 || size % 4 != 2 {
            continue;
        }
        let s = set.trailing_zeros() as usize;
        // reach[mask][v]: path from s through exactly mask ending at v
        let mut reach = vec![0u32; 1 << n];
        reach[1 << s] = 1 << s;
        let mut sub = Vec::new();
        let mut t = set;
        loop {
            sub.push(t);
            if t == 0 {
                break;
            }
            t = (t - 1) & set;
        }
        sub.sort_by_key(|m| m.count_ones());
        for &mask in &sub {
            if mask & (1 << s) == 0 || reach[mask as usize] == 0 {
                continue;
            }
            let ends = reach[mask as usize];
            for v in 0..n {
                if ends >> v & 1 == 0 {
                    continue;
                }
                for &u in g.neighbors(v) {
                    if set >> u & 1 == 1 && mask >> u & 1 == 0 {
                        reach[(mask | 1 << u) as usize] |= 1 << u;
                    }
                }
            }
        }
        let full = reach[set as usize];
        if (0..n).any(|v| full >> v & 1 == 1 && g.has_edge(v, s)) {
            return true;
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bipartite_agrees_with_brute_force(g in graph_strategy(12)) {
        let found = is_bipartite(&g);
        prop_assert_eq!(found.is_some(), brute_bipartite(&g));
        if let Some(b) = found {
            let side = b.side_of(g.n());
            prop_assert_eq!(b.left.len() + b.right.len(), g.n());
            for &(u, v) in g.edges() {
                prop_assert_ne!(side[u], side[v]);
            }
        }
    }

    #[test]
    fn cycle_class_agrees_with_subset_oracle(g in graph_strategy(10)) {
        let report = has_cycle_2_mod_4_capped(&g, u64::MAX);
        prop_assert!(report.exhausted || report.has_bad_cycle);
        prop_assert_eq!(report.has_bad_cycle, brute_bad_cycle(&g));
        if let Some(w) = report.witness {
            prop_assert_eq!(w.len() % 4, 2);
            for i in 0..w.len() {
                prop_assert!(g.has_edge(w[i], w[(i + 1) % w.len()]));
            }
        }
    }

    #[test]
    fn euler_tour_uses_every_edge_once(g in graph_strategy(9)) {
        // double every edge's parity problem away: keep only graphs that qualify
        let qualifies = g.m() > 0
            && g.vertices().all(|v| g.degree(v) % 2 == 0)
            && decomp_core::graph::connected_components(&g).iter().filter(|c| c.len() > 1).count() == 1;
        let start = g.vertices().find(|&v| g.degree(v) > 0);
        match (qualifies, start) {
            (true, Some(s)) => {
                let tour = euler_tour(&g, s).unwrap();
                prop_assert_eq!(tour.len(), g.m());
                let mut seen = vec![false; g.m()];
                let mut at = s;
                for &e in &tour {
                    prop_assert!(!seen[e]);
                    seen[e] = true;
                    let (a, b) = g.edge(e);
                    prop_assert!(a == at || b == at);
                    at = if a == at { b } else { a };
                }
                prop_assert_eq!(at, s);
            }
            (false, Some(s)) => prop_assert!(euler_tour(&g, s).is_err()),
            _ => {}
        }
    }

    #[test]
    fn planar_verdict_respects_edge_bound(g in graph_strategy(11)) {
        if is_planar(&g) {
            if g.n() >= 3 {
                prop_assert!(g.m() <= 3 * g.n() - 6);
            }
            prop_assert!(planar_embedding(&g).unwrap().is_planar_embedding_of(&g));
        }
    }
}

#[test]
fn default_cap_cycle_report_on_even_cycles() {
    let g = decomp_core::graph::families::cycle(12);
    let r = has_cycle_2_mod_4(&g);
    assert!(!r.has_bad_cycle && r.exhausted);
}
