//! Canonical labeling of graphs on at most 16 vertices by partition
//! refinement and individualization, pruned with the automorphisms found
//! along the way.

use super::{SmallGraph, MAX_SMALL};

/// The canonical certificate: the upper triangle of the relabeled
/// adjacency matrix, row by row, as bits. Two graphs on the same number of
/// vertices are isomorphic iff their certificates are equal.
pub fn canonical_form(g: &SmallGraph) -> u128 {
    canonical_labeling(g).0
}

/// Certificate and labeling: `lab[i]` is the vertex placed at position `i`.
pub fn canonical_labeling(g: &SmallGraph) -> (u128, Vec<u8>) {
    let n = g.n();
    if n <= 1 {
        return (0, (0..n as u8).collect());
    }
    let mut s = Search {
        g,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
        path: Vec::new(),
    };
    let mut p = Partition::unit(n);
    refine(g, &mut p, &[0]);
    s.visit(&p, 0);
    let (cert, lab, _) = s.best.expect("search reaches a leaf");
    (cert, lab[..n].to_vec())
}

/// Ordered partition: `lab` lists vertices cell by cell, `end[i]` marks the
/// last position of a cell.
#[derive(Clone)]
struct Partition {
    n: usize,
    lab: [u8; MAX_SMALL],
    end: [bool; MAX_SMALL],
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut lab = [0u8; MAX_SMALL];
        for (i, l) in lab.iter_mut().enumerate().take(n) {
            *l = i as u8;
        }
        let mut end = [false; MAX_SMALL];
        end[n - 1] = true;
        Partition { n, lab, end }
    }

    /// `(start, len)` of each cell.
    fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let mut start = 0;
        (0..self.n).filter_map(move |i| {
            if self.end[i] {
                let cell = (start, i + 1 - start);
                start = i + 1;
                Some(cell)
            } else {
                None
            }
        })
    }

    fn mask(&self, start: usize, len: usize) -> u16 {
        self.lab[start..start + len].iter().fold(0, |m, &v| m | 1 << v)
    }

    fn is_discrete(&self) -> bool {
        self.end[..self.n].iter().all(|&e| e)
    }
}

/// Splits cells by neighbor counts into splitter cells until the partition
/// is equitable. `seed` lists the starts of the cells to split against
/// first; the partition must already be equitable with respect to every
/// union of the other cells. Cells and splitters are scanned by position and
/// fragments are ordered by count, so the result commutes with relabeling.
fn refine(g: &SmallGraph, p: &mut Partition, seed: &[usize]) {
    let n = p.n;
    // every fragment is queued at most once when created, so 2n slots do
    let mut queue = [0u8; 2 * MAX_SMALL];
    let (mut head, mut tail) = (0, 0);
    let mut queued = [false; MAX_SMALL];
    for &s in seed {
        queue[tail] = s as u8;
        tail += 1;
        queued[s] = true;
    }
    let mut count = [0u32; MAX_SMALL];
    while head < tail {
        let ws = queue[head] as usize;
        head += 1;
        queued[ws] = false;
        let we = (ws..n).find(|&i| p.end[i]).expect("cell end");
        let w = p.mask(ws, we + 1 - ws);
        let mut xs = 0;
        while xs < n {
            let xe = (xs..n).find(|&i| p.end[i]).expect("cell end");
            if xe > xs {
                let cell = &mut p.lab[xs..=xe];
                for &v in cell.iter() {
                    count[v as usize] = (g.adj[v as usize] & w).count_ones();
                }
                let c0 = count[cell[0] as usize];
                if cell.iter().any(|&v| count[v as usize] != c0) {
                    cell.sort_unstable_by_key(|&v| (count[v as usize], v));
                    let was_queued = queued[xs];
                    let mut frags = [(0usize, 0usize); MAX_SMALL];
                    let mut nf = 0;
                    let mut fs = xs;
                    for i in xs..=xe {
                        if i == xe || count[p.lab[i] as usize] != count[p.lab[i + 1] as usize] {
                            p.end[i] = true;
                            frags[nf] = (fs, i + 1 - fs);
                            nf += 1;
                            fs = i + 1;
                        }
                    }
                    // a cell already queued keeps its start in the queue; otherwise
                    // the largest fragment can be skipped
                    let skip = if was_queued {
                        xs
                    } else {
                        let big = frags[..nf].iter().max_by_key(|&&(s, l)| (l, std::cmp::Reverse(s))).expect("fragments");
                        big.0
                    };
                    for &(s, _) in &frags[..nf] {
                        if s != skip && !queued[s] {
                            queue[tail] = s as u8;
                            tail += 1;
                            queued[s] = true;
                        }
                    }
                }
            }
            xs = xe + 1;
        }
    }
}

fn certificate(g: &SmallGraph, lab: &[u8]) -> u128 {
    let n = g.n();
    let mut cert = 0u128;
    let mut bit = 0;
    for i in 0..n {
        let row = g.adj[lab[i] as usize];
        for j in i + 1..n {
            if row >> lab[j] & 1 == 1 {
                cert |= 1 << bit;
            }
            bit += 1;
        }
    }
    cert
}

struct Search<'a> {
    g: &'a SmallGraph,
    n: usize,
    /// Certificate, labeling and path of the first leaf.
    first: Option<(u128, [u8; MAX_SMALL], Vec<u8>)>,
    best: Option<(u128, [u8; MAX_SMALL], Vec<u8>)>,
    /// Automorphisms as images `γ[v]`.
    autos: Vec<[u8; MAX_SMALL]>,
    /// Vertices individualized on the way to the current node.
    path: Vec<u8>,
}

impl Search<'_> {
    /// Returns `Some(depth)` to unwind to the node at that depth.
    fn visit(&mut self, p: &Partition, depth: usize) -> Option<usize> {
        if p.is_discrete() {
            return self.leaf(p);
        }
        let (ts, tl) = p.cells().find(|&(_, l)| l > 1).expect("non-discrete");
        let target: Vec<u8> = p.lab[ts..ts + tl].to_vec();
        let mut done: Vec<u8> = Vec::new();
        for &v in &target {
            if !done.is_empty() && self.same_orbit_as_done(v, &done) {
                continue;
            }
            done.push(v);
            let mut child = p.clone();
            let i = child.lab[ts..ts + tl].iter().position(|&x| x == v).expect("in cell") + ts;
            child.lab.swap(ts, i);
            child.end[ts] = true;
            refine(self.g, &mut child, &[ts]);
            self.path.push(v);
            let jump = self.visit(&child, depth + 1);
            self.path.pop();
            if let Some(j) = jump {
                if j < depth {
                    return Some(j);
                }
            }
        }
        None
    }

    /// Whether `v` is in the orbit of an explored sibling under the stored
    /// automorphisms that fix the current path pointwise.
    fn same_orbit_as_done(&self, v: u8, done: &[u8]) -> bool {
        let n = self.n;
        let mut parent: [u8; MAX_SMALL] = [0; MAX_SMALL];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        fn find(parent: &mut [u8; MAX_SMALL], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if self.path.iter().all(|&u| gamma[u as usize] == u) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x as u8), find(&mut parent, gamma[x]));
                    if a != b {
                        parent[a as usize] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        done.iter().any(|&d| find(&mut parent, d) == rv)
    }

    fn leaf(&mut self, p: &Partition) -> Option<usize> {
        let cert = certificate(self.g, &p.lab);
        let Some((first_cert, first_lab, first_path)) = &self.first else {
            self.first = Some((cert, p.lab, self.path.clone()));
            self.best = self.first.clone();
            return None;
        };
        if cert == *first_cert {
            let gamma = mapping(first_lab, &p.lab, self.n);
            self.autos.push(gamma);
            return Some(divergence(first_path, &self.path));
        }
        let (best_cert, best_lab, best_path) = self.best.as_ref().expect("set with first");
        if cert == *best_cert {
            let gamma = mapping(best_lab, &p.lab, self.n);
            let jump = divergence(best_path, &self.path);
            self.autos.push(gamma);
            return Some(jump);
        }
        if cert > *best_cert {
            self.best = Some((cert, p.lab, self.path.clone()));
        }
        None
    }
}

/// `γ` with `γ(from[i]) = to[i]`.
fn mapping(from: &[u8; MAX_SMALL], to: &[u8; MAX_SMALL], n: usize) -> [u8; MAX_SMALL] {
    let mut gamma = [0u8; MAX_SMALL];
    for i in 0..n {
        gamma[from[i] as usize] = to[i];
    }
    gamma
}

/// Depth of the deepest node shared by two root-to-leaf paths.
fn divergence(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
