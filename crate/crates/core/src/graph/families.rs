//! Named graphs used across tests, fixtures and the CLI.

use super::Graph;

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    Graph::new(k + 1, (1..=k).map(|v| (0, v))).unwrap()
}

/// The `d`-dimensional hypercube `Q_d`.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let edges = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))).filter(|&(u, v)| u < v);
    Graph::new(n, edges).unwrap()
}

/// Prism over `C_k`: outer cycle `0..k`, inner cycle `k..2k`, spokes `i -- k+i`.
pub fn prism(k: usize) -> Graph {
    let outer = (0..k).map(|i| (i, (i + 1) % k));
    let inner = (0..k).map(|i| (k + i, k + (i + 1) % k));
    let spokes = (0..k).map(|i| (i, k + i));
    Graph::new(2 * k, outer.chain(inner).chain(spokes)).unwrap()
}

/// Heawood graph: the 14-vertex incidence graph of the Fano plane.
pub fn heawood() -> Graph {
    let n = 14;
    let ring = (0..n).map(|i| (i, (i + 1) % n));
    let chords = (0..n).step_by(2).map(|i| (i, (i + 5) % n));
    Graph::new(n, ring.chain(chords)).unwrap()
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
}

/// Two vertices 0 and 1 joined by three internally disjoint paths with the
/// given numbers of edges. At most one length may be 1.
pub fn theta(lengths: [usize; 3]) -> Graph {
    assert!(lengths.iter().all(|&l| l >= 1));
    assert!(lengths.iter().filter(|&&l| l == 1).count() <= 1);
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in &lengths {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::new(next, edges).unwrap()
}
