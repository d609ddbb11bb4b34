//! The constructive NAE edge coloring of a connected graph with minimum
//! degree at least 2 that is not an odd cycle.

use super::{EdgeColor, TwoEdgeColoring};
use crate::error::{precondition, Result};
use crate::graph::{connected_components, euler_tour, Graph};

use EdgeColor::{Blue, Red};

/// `None` exactly for odd cycles. Cycles alternate; with a vertex of degree
/// at least 4 the coloring alternates along an Euler tour of the graph with
/// odd-degree vertices paired through auxiliary vertices; with maximum
/// degree 3 a path of degree-2 vertices between two degree-3 vertices is
/// colored, the rest recursed on, and odd-cycle leftovers are colored
/// relative to the path's endpoint.
pub fn nae_edge_coloring(g: &Graph) -> Result<Option<TwoEdgeColoring>> {
    if g.n() == 0 || g.min_degree() < Some(2) {
        return Err(precondition("minimum degree below 2"));
    }
    if connected_components(g).len() != 1 {
        return Err(precondition("graph is disconnected"));
    }
    if g.is_cycle() && g.m() % 2 == 1 {
        return Ok(None);
    }
    let mut colors = vec![None; g.m()];
    color_component(g, &vec![true; g.m()], &mut colors);
    let colors = colors.into_iter().map(|c| c.expect("every edge colored")).collect();
    Ok(Some(TwoEdgeColoring { colors }))
}

/// Edge-id view of one connected piece of `g`.
struct Piece<'a> {
    g: &'a Graph,
    live: &'a [bool],
}

impl Piece<'_> {
    /// `(neighbor, edge id)` pairs of `v` inside the piece, by neighbor id.
    fn adj(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.g
            .neighbors(v)
            .iter()
            .zip(self.g.incident_edges(v))
            .filter(|(_, &e)| self.live[e])
            .map(|(&w, &e)| (w, e))
    }

    fn degree(&self, v: usize) -> usize {
        self.adj(v).count()
    }

    fn vertices(&self) -> Vec<usize> {
        self.g.vertices().filter(|&v| self.degree(v) > 0).collect()
    }
}

fn color_component(g: &Graph, live: &[bool], out: &mut [Option<EdgeColor>]) {
    let p = Piece { g, live };
    let verts = p.vertices();
    let max_deg = verts.iter().map(|&v| p.degree(v)).max().unwrap_or(0);
    match max_deg {
        2 => {
            let start = verts[0];
            color_cycle_from(&p, start, Red, out);
        }
        3 => color_cubic_case(&p, &verts, out),
        _ => color_euler_case(&p, &verts, out),
    }
}

/// Walks the cycle through `b`, coloring alternately from `first`; on an odd
/// cycle both edges at `b` get `first`.
fn color_cycle_from(p: &Piece<'_>, b: usize, first: EdgeColor, out: &mut [Option<EdgeColor>]) {
    let (mut at, mut via) = {
        let (w, e) = p.adj(b).next().expect("cycle vertex has edges");
        out[e] = Some(first);
        (w, e)
    };
    let mut c = first;
    while at != b {
        let (w, e) = p.adj(at).find(|&(_, e)| e != via).expect("cycle continues");
        c = c.flip();
        out[e] = Some(c);
        at = w;
        via = e;
    }
}

/// Per-edge colors of the cycle graph `g`, alternating from `b`; when the
/// cycle is odd, every vertex but `b` sees both colors and both edges at `b`
/// get `color`.
pub fn odd_cycle_coloring(g: &Graph, b: usize, color: EdgeColor) -> Vec<Option<EdgeColor>> {
    let live = vec![true; g.m()];
    let mut out = vec![None; g.m()];
    color_cycle_from(&Piece { g, live: &live }, b, color, &mut out);
    out
}

fn color_euler_case(p: &Piece<'_>, verts: &[usize], out: &mut [Option<EdgeColor>]) {
    let g = p.g;
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in verts {
        for (w, _) in p.adj(*v) {
            if *v < w {
                edges.push((*v, w));
            }
        }
    }
    let odd: Vec<usize> = verts.iter().copied().filter(|&v| p.degree(v) % 2 == 1).collect();
    let mut total = n;
    for pair in odd.chunks(2) {
        edges.push((pair[0], total));
        edges.push((pair[1], total));
        total += 1;
    }
    let aux = Graph::new(total, edges).expect("auxiliary graph is simple");
    let start = *verts.iter().find(|&&v| p.degree(v) >= 4).expect("degree >= 4 exists");
    let tour = euler_tour(&aux, start).expect("all degrees even and connected");
    for (i, &e) in tour.iter().enumerate() {
        let (a, b) = aux.edge(e);
        if b < n {
            let orig = g.edge_id(a, b).expect("original edge");
            out[orig] = Some(if i % 2 == 0 { Red } else { Blue });
        }
    }
}

fn color_cubic_case(p: &Piece<'_>, verts: &[usize], out: &mut [Option<EdgeColor>]) {
    let g = p.g;
    let v = *verts.iter().find(|&&x| p.degree(x) == 3).expect("degree-3 vertex");
    // path v x1 ... xi u through degree-2 vertices; a walk that comes back
    // to v is skipped, and some other first step then reaches u != v
    let mut path = None;
    for (first, e0) in p.adj(v) {
        let mut edges = vec![e0];
        let (mut at, mut via) = (first, e0);
        while p.degree(at) == 2 {
            let (w, e) = p.adj(at).find(|&(_, e)| e != via).expect("degree 2");
            edges.push(e);
            at = w;
            via = e;
        }
        if at != v {
            path = Some((edges, at));
            break;
        }
    }
    let (path_edges, u) = path.expect("a degree-3 endpoint other than v");

    let mut c = Red;
    for &e in &path_edges {
        out[e] = Some(c);
        c = c.flip();
    }
    let color_at_v = Red;
    let color_at_u = out[*path_edges.last().unwrap()].unwrap();

    let mut rest = p.live.to_vec();
    for &e in &path_edges {
        rest[e] = false;
    }
    for comp_edges in split_components(g, &rest) {
        let piece = Piece { g, live: &comp_edges };
        let comp_verts = piece.vertices();
        let is_cycle = comp_verts.iter().all(|&x| piece.degree(x) == 2);
        let m = comp_edges.iter().filter(|&&b| b).count();
        if is_cycle && m % 2 == 1 {
            // odd cycle: color relative to v if it is here, else u
            let (b, c) = if comp_verts.contains(&v) { (v, color_at_v) } else { (u, color_at_u) };
            color_cycle_from(&piece, b, c.flip(), out);
        } else {
            color_component(g, &comp_edges, out);
        }
    }
}

/// Splits a live edge set into connected pieces, each as its own mask.
fn split_components(g: &Graph, live: &[bool]) -> Vec<Vec<bool>> {
    let ids: Vec<usize> = (0..g.m()).filter(|&e| live[e]).collect();
    let sub = g.edge_subgraph(&ids);
    let mut out = Vec::new();
    for comp in connected_components(&sub) {
        if comp.len() < 2 {
            continue;
        }
        let mut mask = vec![false; g.m()];
        for &e in &ids {
            let (a, _) = g.edge(e);
            if comp.binary_search(&a).is_ok() {
                mask[e] = true;
            }
        }
        out.push(mask);
    }
    out
}
