//! Exhaustive generation of small graphs up to isomorphism, and seeded
//! random regular bipartite graphs.

mod canon;

pub use canon::{canonical_form, canonical_labeling};

use std::collections::HashSet;
use std::hash::{BuildHasherDefault, Hasher};

use rand::Rng;

use crate::error::{precondition, Result};
use crate::graph::Graph;

/// Largest vertex count a [`SmallGraph`] holds.
pub const MAX_SMALL: usize = 16;

/// Adjacency bitmasks for graphs on at most [`MAX_SMALL`] vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: u8,
    pub(crate) adj: [u16; MAX_SMALL],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_SMALL, "{n} vertices exceed {MAX_SMALL}");
        SmallGraph { n: n as u8, adj: [0; MAX_SMALL] }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut s = SmallGraph::empty(g.n());
        for &(u, v) in g.edges() {
            s.add_edge(u, v);
        }
        s
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n(), self.edges()).expect("bitmask graph is simple")
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn m(&self) -> usize {
        self.adj[..self.n()].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            let mut higher = self.adj[u] >> u >> 1;
            let mut v = u + 1;
            while higher != 0 {
                if higher & 1 == 1 {
                    out.push((u, v));
                }
                higher >>= 1;
                v += 1;
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let all = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == all
    }

    pub fn complement(&self) -> SmallGraph {
        let n = self.n();
        let all = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
        let mut g = *self;
        for v in 0..n {
            g.adj[v] = !self.adj[v] & all & !(1 << v);
        }
        g
    }

    /// Adds a vertex adjacent to the vertices in `mask`.
    fn extended(&self, mask: u16) -> SmallGraph {
        let p = self.n();
        let mut g = *self;
        g.n += 1;
        g.adj[p] = mask;
        let mut rest = mask;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            g.adj[u] |= 1 << p;
        }
        g
    }
}

/// Multiplicative hasher for the certificate sets, which hold only `u128`s.
#[derive(Default)]
struct CertHasher(u64);

impl Hasher for CertHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(5) ^ b as u64).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
        }
    }

    fn write_u128(&mut self, x: u128) {
        let folded = (x as u64) ^ ((x >> 64) as u64).rotate_left(29);
        self.0 = (folded ^ folded >> 31).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        self.0 ^= self.0 >> 29;
    }
}

type CertSet = HashSet<u128, BuildHasherDefault<CertHasher>>;

/// Counters from one enumeration run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    /// Augmentations that passed the cheap filters and were canonized.
    pub canonized: u64,
    /// Isomorphism classes visited, all sizes.
    pub visited: u64,
}

/// Visits one graph per isomorphism class on `1..=max_n` vertices among the
/// graphs all of whose induced subgraphs satisfy `keep`, smallest first.
///
/// Classes on `n` vertices are grown from those on `n - 1` by adding a
/// vertex of minimum degree; among the minimum-degree vertices the new one
/// must maximize the degree sum over its neighborhood. Every graph arises
/// this way from the class of one of its vertex-deleted subgraphs, and
/// duplicates are dropped by canonical form.
pub fn for_each_graph(
    max_n: usize,
    keep: impl Fn(&SmallGraph) -> bool,
    mut visit: impl FnMut(&SmallGraph),
) -> Result<EnumStats> {
    if max_n > MAX_SMALL {
        return Err(precondition(format!("{max_n} vertices exceed {MAX_SMALL}")));
    }
    let mut stats = EnumStats::default();
    let mut level: Vec<SmallGraph> = Vec::new();
    let k1 = SmallGraph::empty(1);
    if max_n >= 1 && keep(&k1) {
        visit(&k1);
        stats.visited += 1;
        level.push(k1);
    }
    for n in 2..=max_n {
        let mut next = Vec::new();
        grow(&level, &mut stats, |g| keep(g), |g| {
            visit(g);
            if n < max_n {
                next.push(*g);
            }
        });
        level = next;
    }
    Ok(stats)
}

/// Visits one graph per isomorphism class on exactly `n` vertices.
///
/// Only classes with at most half of the `n(n-1)/2` possible edges are
/// canonized on the last level; each of them is visited together with its
/// complement unless it has exactly half.
pub fn for_each_graph_on(n: usize, mut visit: impl FnMut(&SmallGraph)) -> Result<EnumStats> {
    if n > MAX_SMALL {
        return Err(precondition(format!("{n} vertices exceed {MAX_SMALL}")));
    }
    if n <= 1 {
        visit(&SmallGraph::empty(n));
        return Ok(EnumStats { canonized: 0, visited: 1 });
    }
    let mut level = Vec::new();
    let mut stats = for_each_graph(n - 1, |_| true, |g| {
        if g.n() == n - 1 {
            level.push(*g);
        }
    })?;
    let pairs = n * (n - 1) / 2;
    let mut visited = 0;
    grow(&level, &mut stats, |g| 2 * g.m() <= pairs, |g| {
        visit(g);
        visited += 1;
        if 2 * g.m() < pairs {
            visit(&g.complement());
            visited += 1;
        }
    });
    stats.visited = visited;
    Ok(stats)
}

/// One level of the augmentation: visits each new class among the children
/// of `level` that satisfy `keep`.
fn grow(
    level: &[SmallGraph],
    stats: &mut EnumStats,
    keep: impl Fn(&SmallGraph) -> bool,
    mut visit: impl FnMut(&SmallGraph),
) {
    let mut seen = CertSet::default();
    for parent in level {
        for child in augmentations(parent) {
            if !keep(&child) {
                continue;
            }
            stats.canonized += 1;
            if seen.insert(canonical_form(&child)) {
                stats.visited += 1;
                visit(&child);
            }
        }
    }
}

/// Children of `parent` whose new vertex passes the deletion rule.
fn augmentations(parent: &SmallGraph) -> impl Iterator<Item = SmallGraph> + '_ {
    let p = parent.n();
    let deg: Vec<u32> = (0..p).map(|v| parent.adj[v].count_ones()).collect();
    let delta = deg.iter().copied().min().unwrap_or(0);
    (0u16..1 << p).filter_map(move |mask| {
        let d = mask.count_ones();
        if d > delta + 1 {
            return None;
        }
        // vertices that would drop below degree d must gain an edge
        let must: u16 = (0..p).filter(|&v| deg[v] + 1 == d).fold(0, |m, v| m | 1 << v);
        if mask & must != must {
            return None;
        }
        let child = parent.extended(mask);
        let cdeg = |v: usize| child.adj[v].count_ones();
        let inv = |v: usize| {
            let mut s = 0;
            let mut rest = child.adj[v];
            while rest != 0 {
                s += cdeg(rest.trailing_zeros() as usize);
                rest &= rest - 1;
            }
            s
        };
        let mine = inv(p);
        if (0..p).any(|v| cdeg(v) == d && inv(v) > mine) {
            return None;
        }
        Some(child)
    })
}

/// Visits one graph per isomorphism class of connected `r`-regular bipartite
/// graphs with `k` vertices per side: left side `0..k`, right side `k..2k`.
///
/// Rows of the biadjacency matrix are generated in nondecreasing bitmask
/// order with the first row on the lowest `r` columns, which every class
/// admits after permuting rows and columns.
pub fn for_each_regular_bipartite(k: usize, r: usize, mut visit: impl FnMut(&SmallGraph)) -> Result<EnumStats> {
    if 2 * k > MAX_SMALL || r == 0 || r > k {
        return Err(precondition(format!("need 1 <= r <= k and 2k <= {MAX_SMALL}, got k={k}, r={r}")));
    }
    let rows_masks: Vec<u16> = (0u16..1 << k).filter(|m| m.count_ones() as usize == r).collect();
    let mut stats = EnumStats::default();
    let mut seen = CertSet::default();
    let mut rows = vec![(1u16 << r) - 1];
    let mut col = vec![0usize; k];
    for c in col.iter_mut().take(r) {
        *c = 1;
    }
    rows_rec(k, r, &rows_masks, &mut rows, &mut col, &mut |rows: &[u16]| {
        let mut g = SmallGraph::empty(2 * k);
        for (i, &row) in rows.iter().enumerate() {
            for j in 0..k {
                if row >> j & 1 == 1 {
                    g.add_edge(i, k + j);
                }
            }
        }
        if !g.is_connected() {
            return;
        }
        stats.canonized += 1;
        if seen.insert(canonical_form(&g)) {
            stats.visited += 1;
            visit(&g);
        }
    });
    Ok(stats)
}

fn rows_rec(
    k: usize,
    r: usize,
    masks: &[u16],
    rows: &mut Vec<u16>,
    col: &mut [usize],
    emit: &mut dyn FnMut(&[u16]),
) {
    let remaining = k - rows.len();
    if remaining == 0 {
        emit(rows);
        return;
    }
    // every column must still be fillable by the remaining rows
    if col.iter().any(|&c| c + remaining < r) {
        return;
    }
    let last = *rows.last().expect("first row is fixed");
    for &m in masks.iter().filter(|&&m| m >= last) {
        if (0..k).any(|j| m >> j & 1 == 1 && col[j] == r) {
            continue;
        }
        for (j, c) in col.iter_mut().enumerate() {
            *c += (m >> j & 1) as usize;
        }
        rows.push(m);
        rows_rec(k, r, masks, rows, col, emit);
        rows.pop();
        for (j, c) in col.iter_mut().enumerate() {
            *c -= (m >> j & 1) as usize;
        }
    }
}

/// A uniform-ish random `r`-regular bipartite graph with `k` vertices per
/// side: a circulant start mixed by `20·k·r` accepted double-edge swaps.
/// Left side `0..k`, right side `k..2k`.
pub fn random_regular_bipartite<R: Rng>(k: usize, r: usize, rng: &mut R) -> Result<Graph> {
    if r == 0 || r > k {
        return Err(precondition(format!("need 1 <= r <= k, got k={k}, r={r}")));
    }
    let mut adj: Vec<HashSet<usize>> = vec![HashSet::new(); k];
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(k * r);
    for i in 0..k {
        for t in 0..r {
            let j = (i + t) % k;
            adj[i].insert(j);
            edges.push((i, j));
        }
    }
    let target = 20 * k * r;
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < target && attempts < 100 * target {
        attempts += 1;
        let (e, f) = (rng.gen_range(0..edges.len()), rng.gen_range(0..edges.len()));
        let ((a, b), (c, d)) = (edges[e], edges[f]);
        if a == c || b == d || adj[a].contains(&d) || adj[c].contains(&b) {
            continue;
        }
        adj[a].remove(&b);
        adj[c].remove(&d);
        adj[a].insert(d);
        adj[c].insert(b);
        edges[e] = (a, d);
        edges[f] = (c, b);
        accepted += 1;
    }
    Graph::new(2 * k, edges.into_iter().map(|(i, j)| (i, k + j)))
}
