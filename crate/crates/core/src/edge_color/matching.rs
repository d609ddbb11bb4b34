//! Maximum matchings: augmenting paths on bipartite graphs, Edmonds'
//! blossom contraction otherwise.

use std::collections::VecDeque;

use super::Matching;
use crate::graph::{is_bipartite, Graph};

const NONE: usize = usize::MAX;

/// A perfect matching (the edges colored 1 in a 1-in-Degree edge coloring),
/// or `None` if the graph has none.
pub fn one_in_degree_edge(g: &Graph) -> Option<Matching> {
    if g.n() % 2 == 1 || g.vertices().any(|v| g.degree(v) == 0) {
        return None;
    }
    let m = maximum_matching(g);
    m.is_perfect_for(g).then_some(m)
}

pub fn maximum_matching(g: &Graph) -> Matching {
    let mate = match is_bipartite(g) {
        Some(b) => kuhn(g, &b.side_of(g.n())),
        None => edmonds(g),
    };
    let mut edges: Vec<usize> = g
        .vertices()
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| g.edge_id(v, mate[v]).expect("matched pair is an edge"))
        .collect();
    edges.sort_unstable();
    Matching { edges }
}

/// Matches each vertex, in id order, to its first free neighbor.
fn greedy(g: &Graph) -> Vec<usize> {
    let mut mate = vec![NONE; g.n()];
    for v in g.vertices() {
        if mate[v] == NONE {
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    mate
}

fn kuhn(g: &Graph, right: &[bool]) -> Vec<usize> {
    let mut mate = greedy(g);
    fn augment(v: usize, g: &Graph, seen: &mut [bool], mate: &mut [usize]) -> bool {
        for &w in g.neighbors(v) {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if mate[w] == NONE || augment(mate[w], g, seen, mate) {
                mate[v] = w;
                mate[w] = v;
                return true;
            }
        }
        false
    }
    for v in g.vertices().filter(|&v| !right[v]) {
        if mate[v] != NONE {
            continue;
        }
        let mut seen = vec![false; g.n()];
        augment(v, g, &mut seen, &mut mate);
    }
    mate
}

fn edmonds(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut mate = greedy(g);
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(path_end) = find_augmenting(g, root, &mate) {
                augment_along(path_end, &mut mate);
            }
        }
    }
    mate
}

struct Forest {
    parent: Vec<usize>,
    base: Vec<usize>,
}

/// BFS from an exposed root, contracting blossoms by base relabeling.
/// Returns the exposed endpoint of an augmenting path; following
/// `parent` / `mate` from it leads back to the root.
fn find_augmenting(g: &Graph, root: usize, mate: &[usize]) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    let mut f = Forest { parent: vec![NONE; n], base: (0..n).collect() };
    let mut used = vec![false; n];
    let mut queue = VecDeque::from([root]);
    used[root] = true;
    while let Some(v) = queue.pop_front() {
        for &to in g.neighbors(v) {
            if f.base[v] == f.base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && f.parent[mate[to]] != NONE) {
                let cur = lca(&f, mate, v, to);
                let mut in_blossom = vec![false; n];
                mark_path(&mut f, mate, &mut in_blossom, v, cur, to);
                mark_path(&mut f, mate, &mut in_blossom, to, cur, v);
                for i in 0..n {
                    if in_blossom[f.base[i]] {
                        f.base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if f.parent[to] == NONE {
                f.parent[to] = v;
                if mate[to] == NONE {
                    return Some((to, f.parent));
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    None
}

fn lca(f: &Forest, mate: &[usize], mut a: usize, mut b: usize) -> usize {
    let mut seen = vec![false; mate.len()];
    loop {
        a = f.base[a];
        seen[a] = true;
        if mate[a] == NONE {
            break;
        }
        a = f.parent[mate[a]];
    }
    loop {
        b = f.base[b];
        if seen[b] {
            return b;
        }
        b = f.parent[mate[b]];
    }
}

fn mark_path(f: &mut Forest, mate: &[usize], in_blossom: &mut [bool], mut v: usize, b: usize, mut child: usize) {
    while f.base[v] != b {
        in_blossom[f.base[v]] = true;
        in_blossom[f.base[mate[v]]] = true;
        f.parent[v] = child;
        child = mate[v];
        v = f.parent[mate[v]];
    }
}

fn augment_along((mut v, parent): (usize, Vec<usize>), mate: &mut [usize]) {
    while v != NONE {
        let pv = parent[v];
        let ppv = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = ppv;
    }
}
