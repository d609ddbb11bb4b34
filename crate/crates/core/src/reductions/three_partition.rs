//! Vertex-weighted bipartite gadgets for 3-Partition: `f(x_{i,j}) = 1`
//! places `a_j` in part `i`.

use super::{Builder, GadgetInstance};
use crate::decomp::{verify_one_in_degree_weighted, Decomposition};
use crate::error::{precondition, Error, Result};
use crate::graph::VertexWeightedGraph;

#[derive(Clone, Debug)]
pub struct ThreePartitionGadget {
    pub instance: GadgetInstance,
    pub a: Vec<i64>,
    pub k: i64,
    /// `x_{i,j}` ids, `[i][j]`.
    x: Vec<Vec<usize>>,
    /// `y^1_i, y^2_i`.
    y: Vec<[usize; 2]>,
    /// `z^1_j … z^5_j`.
    z: Vec<[usize; 5]>,
}

impl ThreePartitionGadget {
    pub fn weighted(&self) -> VertexWeightedGraph {
        self.instance.weighted().expect("gadget is weighted")
    }

    pub fn parts(&self) -> usize {
        self.x.len()
    }
}

/// Vertices `x_{i,j}` (row by row), `y^1_i, y^2_i`, then `z^1_j … z^5_j`.
/// Weights `w(x_{i,j}) = a_j`, `w(y^1) = 1`, `w(y^2) = 1 - k`,
/// `w(z^2_j) = 1 - a_j`, `w(z^5_j) = a_j`, all other `z` weigh 1.
pub fn gen_three_partition_graph(a: &[i64], k: i64) -> Result<ThreePartitionGadget> {
    if a.is_empty() || a.len() % 3 != 0 {
        return Err(precondition(format!("{} numbers is not a positive multiple of 3", a.len())));
    }
    let n = a.len() / 3;
    let total: i64 = a.iter().sum();
    if total != n as i64 * k {
        return Err(precondition(format!("sum {total} differs from n·k = {}", n as i64 * k)));
    }
    if let Some(j) = a.iter().position(|&v| !(4 * v > k && 2 * v < k)) {
        return Err(precondition(format!("a_{j} = {} violates k/4 < a < k/2", a[j])));
    }
    let mut b = Builder::default();
    let mut w = Vec::new();
    let x: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..3 * n)
                .map(|j| {
                    w.push(a[j]);
                    b.vertex("x", format!("i{i}/j{j}"))
                })
                .collect()
        })
        .collect();
    let y: Vec<[usize; 2]> = (0..n)
        .map(|i| {
            w.extend([1, 1 - k]);
            [b.vertex("y1", format!("i{i}")), b.vertex("y2", format!("i{i}"))]
        })
        .collect();
    let z: Vec<[usize; 5]> = (0..3 * n)
        .map(|j| {
            w.extend([1, 1 - a[j], 1, 1, a[j]]);
            [1, 2, 3, 4, 5].map(|l| b.vertex(&format!("z{l}"), format!("j{j}")))
        })
        .collect();
    for i in 0..n {
        for j in 0..3 * n {
            b.edge(y[i][0], x[i][j]);
            b.edge(z[j][0], x[i][j]);
        }
        b.edge(y[i][0], y[i][1]);
    }
    for zj in &z {
        for (p, q) in [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)] {
            b.edge(zj[p], zj[q]);
        }
    }
    let params = serde_json::json!({ "reduction": "three-partition", "a": a, "k": k, "n": n });
    let instance = b.finish(Some(w), params)?;
    Ok(ThreePartitionGadget { instance, a: a.to_vec(), k, x, y, z })
}

/// Part `l` is `{j : x_{l,j} ∈ A}`; each part has three indices summing
/// (over `a`) to `k`.
pub fn partition_from_coloring(gt: &ThreePartitionGadget, d: &Decomposition) -> Result<Vec<[usize; 3]>> {
    if !verify_one_in_degree_weighted(&gt.weighted(), d)? {
        return Err(Error::InvalidWitness("not a weighted 1-in-Degree coloring".into()));
    }
    gt.x.iter()
        .map(|row| {
            let js: Vec<usize> = (0..row.len()).filter(|&j| d.contains(row[j])).collect();
            let sum: i64 = js.iter().map(|&j| gt.a[j]).sum();
            match js.as_slice() {
                &[p, q, r] if sum == gt.k => Ok([p, q, r]),
                _ => Err(Error::InternalAssertion(format!("part {js:?} is not a triple summing to k"))),
            }
        })
        .collect()
}

/// Inverse of [`partition_from_coloring`]: `y` all in `A`, and per index
/// `z^2, z^3, z^5` in `A`.
pub fn coloring_from_partition(gt: &ThreePartitionGadget, parts: &[[usize; 3]]) -> Result<Decomposition> {
    let m = gt.a.len();
    if parts.len() != gt.parts() {
        return Err(Error::InvalidWitness(format!("{} parts, expected {}", parts.len(), gt.parts())));
    }
    let mut used = vec![false; m];
    for p in parts {
        for &j in p {
            if j >= m || used[j] {
                return Err(Error::InvalidWitness(format!("index {j} missing or reused")));
            }
            used[j] = true;
        }
        let sum: i64 = p.iter().map(|&j| gt.a[j]).sum();
        if sum != gt.k {
            return Err(Error::InvalidWitness(format!("part {p:?} sums to {sum}, not {}", gt.k)));
        }
    }
    let mut set = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        set.extend(p.iter().map(|&j| gt.x[i][j]));
        set.extend(gt.y[i]);
    }
    for zj in &gt.z {
        set.extend([zj[1], zj[2], zj[4]]);
    }
    let d = Decomposition::new(set);
    if !verify_one_in_degree_weighted(&gt.weighted(), &d)? {
        return Err(Error::InternalAssertion("coloring from partition fails verification".into()));
    }
    Ok(d)
}
