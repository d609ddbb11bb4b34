//! Exact rational linear feasibility, and the LP relaxations of the
//! 1-in-Degree and NAE integer programs. On bipartite graphs without cycles
//! of length 2 mod 4 the adjacency matrix is totally unimodular, so a basic
//! feasible point of the relaxation is integral and decides the integer
//! program.

mod simplex;

pub use simplex::feasible;

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::decomp::{verify_nae, verify_one_in_degree, Decomposition};
use crate::error::{precondition, Error, Result};
use crate::graph::{has_cycle_2_mod_4, is_bipartite, Graph};

/// `coeffs · x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

/// Rows of the form `a·x >= b` plus a closed interval per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    num_vars: usize,
    rows: Vec<Row>,
    bounds: Vec<(BigRational, BigRational)>,
}

impl LinearSystem {
    pub fn new(num_vars: usize, rows: Vec<Row>, bounds: Vec<(BigRational, BigRational)>) -> Result<Self> {
        if bounds.len() != num_vars {
            return Err(Error::LengthMismatch { expected: num_vars, actual: bounds.len() });
        }
        if let Some(r) = rows.iter().find(|r| r.coeffs.len() != num_vars) {
            return Err(Error::LengthMismatch { expected: num_vars, actual: r.coeffs.len() });
        }
        if let Some(j) = (0..num_vars).find(|&j| bounds[j].0 > bounds[j].1) {
            return Err(precondition(format!("empty bound interval on variable {j}")));
        }
        Ok(LinearSystem { num_vars, rows, bounds })
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_ints(num_vars: usize, rows: &[(Vec<i64>, i64)], bounds: &[(i64, i64)]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|(c, b)| Row { coeffs: c.iter().map(|&x| int(x)).collect(), rhs: int(*b) })
            .collect();
        LinearSystem::new(num_vars, rows, bounds.iter().map(|&(l, u)| (int(l), int(u))).collect())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn bounds(&self) -> &[(BigRational, BigRational)] {
        &self.bounds
    }

    /// Exact check of every row and bound.
    pub fn satisfied_by(&self, x: &[BigRational]) -> bool {
        x.len() == self.num_vars
            && self.bounds.iter().zip(x).all(|((l, u), v)| l <= v && v <= u)
            && self.rows.iter().all(|r| {
                let lhs: BigRational = r.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
                lhs >= r.rhs
            })
    }

    /// One `row: c0 c1 ... >= rhs` line per row, then `bound j: [l, u]` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str("row:");
            for c in &r.coeffs {
                let _ = write!(out, " {c}");
            }
            let _ = writeln!(out, " >= {}", r.rhs);
        }
        for (j, (l, u)) in self.bounds.iter().enumerate() {
            let _ = writeln!(out, "bound {j}: [{l}, {u}]");
        }
        out
    }
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityResult {
    pub feasible: bool,
    pub point: Option<Vec<BigRational>>,
    /// The point is a basic feasible solution.
    pub basic: bool,
}

impl FeasibilityResult {
    pub fn is_integral(&self) -> bool {
        self.point.as_ref().is_some_and(|p| p.iter().all(|x| x.is_integer()))
    }
}

/// Per vertex `v`, the rows `Σ_{u∈N(v)} f(u) >= lo` and `-Σ f(u) >= -hi`.
fn window_system(g: &Graph, window: impl Fn(usize) -> (i64, i64)) -> LinearSystem {
    let n = g.n();
    let mut rows = Vec::with_capacity(2 * n);
    for v in g.vertices() {
        let (lo, hi) = window(v);
        let mut plus = vec![BigRational::zero(); n];
        for &u in g.neighbors(v) {
            plus[u] = BigRational::one();
        }
        let minus = plus.iter().map(|c| -c).collect();
        rows.push(Row { coeffs: plus, rhs: int(lo) });
        rows.push(Row { coeffs: minus, rhs: int(-hi) });
    }
    LinearSystem::new(n, rows, vec![(int(0), int(1)); n]).expect("consistent dimensions")
}

/// `1 <= Σ_{u∈N(v)} f(u) <= 1` for every `v`, `0 <= f <= 1`.
pub fn build_one_in_degree_system(g: &Graph) -> LinearSystem {
    window_system(g, |_| (1, 1))
}

/// `1 <= Σ_{u∈N(v)} f(u) <= d(v) - 1` for every `v`, `0 <= f <= 1`.
pub fn build_nae_system(g: &Graph) -> LinearSystem {
    window_system(g, |v| (1, g.degree(v) as i64 - 1))
}

fn check_tu_class(g: &Graph) -> Result<()> {
    if is_bipartite(g).is_none() {
        return Err(precondition("graph is not bipartite"));
    }
    let report = has_cycle_2_mod_4(g);
    if report.has_bad_cycle {
        return Err(precondition(format!(
            "graph has a cycle of length {} (2 mod 4)",
            report.witness.map_or(0, |w| w.len())
        )));
    }
    if !report.exhausted {
        return Err(precondition("cycle enumeration hit its cap; class membership unknown"));
    }
    Ok(())
}

fn decide(g: &Graph, sys: LinearSystem, verify: fn(&Graph, &Decomposition) -> Result<bool>) -> Result<Option<Decomposition>> {
    check_tu_class(g)?;
    let res = feasible(&sys);
    if !res.feasible {
        return Ok(None);
    }
    if !res.is_integral() {
        return Err(Error::InternalAssertion("basic point of a unimodular system is fractional".into()));
    }
    let point = res.point.expect("feasible result carries a point");
    let f: Vec<bool> = point.iter().map(|x| x.is_one()).collect();
    let d = Decomposition::from_indicator(&f);
    if !verify(g, &d)? {
        return Err(Error::InternalAssertion("integral LP point fails the verifier".into()));
    }
    Ok(Some(d))
}

/// Polynomial decision for bipartite graphs with no cycle of length 2 mod 4;
/// refuses other graphs, where the relaxation can be feasible without an
/// integral solution (C6 with `f ≡ 1/2`).
pub fn decide_one_in_degree_poly(g: &Graph) -> Result<Option<Decomposition>> {
    decide(g, build_one_in_degree_system(g), verify_one_in_degree)
}

pub fn decide_nae_poly(g: &Graph) -> Result<Option<Decomposition>> {
    decide(g, build_nae_system(g), verify_nae)
}
