//! Monotone (negation-free) formulas, the exactly-one and not-all-equal
//! predicates, and brute-force oracles for both.

mod io;
mod tree_like;

pub use tree_like::TreeLikeInstance;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::graph::{is_planar, Graph};

/// Default variable bound for the exhaustive solvers.
pub const BRUTE_FORCE_BOUND: usize = 26;

/// A formula over variables `0..num_vars` whose clauses list variables
/// (all literals positive). Identical clauses may repeat; a clause may not
/// name the same variable twice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFormula", into = "RawFormula")]
pub struct PositiveFormula {
    num_vars: usize,
    clauses: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawFormula {
    num_vars: usize,
    clauses: Vec<Vec<usize>>,
}

impl TryFrom<RawFormula> for PositiveFormula {
    type Error = Error;
    fn try_from(raw: RawFormula) -> Result<Self> {
        PositiveFormula::new(raw.num_vars, raw.clauses)
    }
}

impl From<PositiveFormula> for RawFormula {
    fn from(f: PositiveFormula) -> Self {
        RawFormula { num_vars: f.num_vars, clauses: f.clauses }
    }
}

impl PositiveFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<usize>>) -> Result<Self> {
        for (c, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(precondition(format!("clause {c} is empty")));
            }
            for (i, &x) in clause.iter().enumerate() {
                if x >= num_vars {
                    return Err(precondition(format!(
                        "clause {c} names variable {x}, only {num_vars} exist"
                    )));
                }
                if clause[..i].contains(&x) {
                    return Err(precondition(format!("clause {c} repeats variable {x}")));
                }
            }
        }
        Ok(PositiveFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<usize>] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Clause ids containing `x`, in clause order.
    pub fn occurrences(&self, x: usize) -> Vec<usize> {
        (0..self.clauses.len())
            .filter(|&c| self.clauses[c].contains(&x))
            .collect()
    }

    /// Occurrence lists for all variables at once.
    pub fn occurrence_lists(&self) -> Vec<Vec<usize>> {
        let mut occ = vec![Vec::new(); self.num_vars];
        for (c, clause) in self.clauses.iter().enumerate() {
            for &x in clause {
                occ[x].push(c);
            }
        }
        occ
    }

    /// Clause size 3 and three occurrences per variable, ignoring planarity.
    pub fn is_cubic(&self) -> bool {
        self.clauses.iter().all(|c| c.len() == 3)
            && self.occurrence_lists().iter().all(|o| o.len() == 3)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn value(&self, x: usize) -> bool {
        self.values[x]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn true_vars(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&x| self.values[x]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Exactly one true member per clause.
    OneInK,
    /// At least one true and at least one false member per clause.
    Nae,
}

impl Mode {
    fn clause_ok(self, trues: usize, len: usize) -> bool {
        match self {
            Mode::OneInK => trues == 1,
            Mode::Nae => trues >= 1 && trues < len,
        }
    }
}

pub fn eval(f: &PositiveFormula, a: &Assignment, mode: Mode) -> Result<bool> {
    if a.len() != f.num_vars {
        return Err(Error::LengthMismatch { expected: f.num_vars, actual: a.len() });
    }
    Ok(f.clauses.iter().all(|c| {
        let trues = c.iter().filter(|&&x| a.values[x]).count();
        mode.clause_ok(trues, c.len())
    }))
}

/// Result of [`validate_cubic_planar`]; `diagnostics` lists every failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicPlanarReport {
    pub valid: bool,
    pub diagnostics: Vec<String>,
}

pub fn validate_cubic_planar(f: &PositiveFormula) -> CubicPlanarReport {
    let mut diagnostics = Vec::new();
    for (c, clause) in f.clauses.iter().enumerate() {
        if clause.len() != 3 {
            diagnostics.push(format!("clause {c} has {} members", clause.len()));
        }
    }
    for (x, occ) in f.occurrence_lists().iter().enumerate() {
        if occ.len() != 3 {
            diagnostics.push(format!("variable {x} occurs in {} clauses", occ.len()));
        }
    }
    if !is_planar(&incidence_graph(f).graph) {
        diagnostics.push("incidence graph is not planar".into());
    }
    CubicPlanarReport { valid: diagnostics.is_empty(), diagnostics }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "index")]
pub enum IncidenceRole {
    Variable(usize),
    Clause(usize),
}

/// Variable `x` is vertex `x`; clause `c` is vertex `num_vars + c`.
#[derive(Clone, Debug)]
pub struct IncidenceGraph {
    pub graph: Graph,
    pub roles: Vec<IncidenceRole>,
}

pub fn incidence_graph(f: &PositiveFormula) -> IncidenceGraph {
    let nv = f.num_vars;
    let edges = f
        .clauses
        .iter()
        .enumerate()
        .flat_map(|(c, clause)| clause.iter().map(move |&x| (x, nv + c)));
    let graph = Graph::new(nv + f.clauses.len(), edges).expect("clause members are distinct");
    let roles = (0..nv)
        .map(IncidenceRole::Variable)
        .chain((0..f.clauses.len()).map(IncidenceRole::Clause))
        .collect();
    IncidenceGraph { graph, roles }
}

pub fn solve_one_in_k(f: &PositiveFormula) -> Result<Option<Assignment>> {
    solve_bounded(f, Mode::OneInK, BRUTE_FORCE_BOUND)
}

pub fn solve_nae(f: &PositiveFormula) -> Result<Option<Assignment>> {
    solve_bounded(f, Mode::Nae, BRUTE_FORCE_BOUND)
}

/// Lexicographically first satisfying assignment, ordering `true` before
/// `false` and variable 0 most significant. The search visits assignments in
/// that order and skips a subtree only once some clause is already decided
/// against the predicate, so the answer equals that of a full scan.
pub fn solve_bounded(f: &PositiveFormula, mode: Mode, bound: usize) -> Result<Option<Assignment>> {
    if f.num_vars > bound {
        return Err(Error::BruteForceBound { size: f.num_vars, limit: bound });
    }
    let occ = f.occurrence_lists();
    let mut state = Search {
        f,
        mode,
        occ: &occ,
        trues: vec![0; f.clauses.len()],
        open: f.clauses.iter().map(Vec::len).collect(),
        values: vec![false; f.num_vars],
    };
    Ok(state.run(0).then(|| Assignment::new(state.values)))
}

struct Search<'a> {
    f: &'a PositiveFormula,
    mode: Mode,
    occ: &'a [Vec<usize>],
    trues: Vec<usize>,
    open: Vec<usize>,
    values: Vec<bool>,
}

impl Search<'_> {
    fn clause_alive(&self, c: usize) -> bool {
        let (t, open, len) = (self.trues[c], self.open[c], self.f.clauses[c].len());
        match self.mode {
            Mode::OneInK => t <= 1 && t + open >= 1,
            Mode::Nae => t + open >= 1 && t < len,
        }
    }

    fn run(&mut self, x: usize) -> bool {
        if x == self.f.num_vars {
            return true;
        }
        for value in [true, false] {
            self.values[x] = value;
            for &c in &self.occ[x] {
                self.open[c] -= 1;
                if value {
                    self.trues[c] += 1;
                }
            }
            let alive = self.occ[x].iter().all(|&c| self.clause_alive(c));
            if alive && self.run(x + 1) {
                return true;
            }
            for &c in &self.occ[x] {
                self.open[c] += 1;
                if value {
                    self.trues[c] -= 1;
                }
            }
        }
        self.values[x] = false;
        false
    }
}

/// The cubic planar formula on four variables whose clauses are all
/// 3-subsets; its incidence graph is the 3-cube.
pub fn cube_formula() -> PositiveFormula {
    PositiveFormula::new(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
        .expect("valid formula")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degree_profile, is_bipartite};

    fn f(n: usize, clauses: &[&[usize]]) -> PositiveFormula {
        PositiveFormula::new(n, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn a(v: &[bool]) -> Assignment {
        Assignment::new(v.to_vec())
    }

    #[test]
    fn construction_rejects_repeats_and_range() {
        assert!(PositiveFormula::new(3, vec![vec![0, 0, 1]]).is_err());
        assert!(PositiveFormula::new(1, vec![vec![0, 0, 0]]).is_err());
        assert!(PositiveFormula::new(2, vec![vec![0, 2]]).is_err());
        assert!(PositiveFormula::new(2, vec![vec![]]).is_err());
        // repeated identical clauses are allowed
        assert!(PositiveFormula::new(3, vec![vec![0, 1, 2]; 3]).is_ok());
    }

    #[test]
    fn validate_examples() {
        assert!(validate_cubic_planar(&cube_formula()).valid);
        let k33 = f(3, &[&[0, 1, 2], &[0, 1, 2], &[0, 1, 2]]);
        let r = validate_cubic_planar(&k33);
        assert!(!r.valid);
        assert_eq!(r.diagnostics, vec!["incidence graph is not planar".to_string()]);
        assert!(!validate_cubic_planar(&f(1, &[&[0], &[0]])).valid);
    }

    #[test]
    fn incidence_examples() {
        let star = incidence_graph(&f(3, &[&[0, 1, 2]]));
        assert_eq!(star.graph.degree(3), 3);
        assert_eq!(star.roles[3], IncidenceRole::Clause(0));
        let cube = incidence_graph(&cube_formula()).graph;
        let p = degree_profile(&cube).unwrap();
        assert_eq!((cube.n(), p.regular), (8, Some(3)));
        assert!(is_bipartite(&cube).is_some());
        let empty = incidence_graph(&PositiveFormula::new(5, vec![]).unwrap()).graph;
        assert_eq!((empty.n(), empty.m()), (5, 0));
    }

    #[test]
    fn one_in_k_examples() {
        let one = f(3, &[&[0, 1, 2]]);
        assert_eq!(solve_one_in_k(&one).unwrap(), Some(a(&[true, false, false])));
        assert_eq!(solve_one_in_k(&cube_formula()).unwrap(), None);
        let chain = f(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(solve_one_in_k(&chain).unwrap(), Some(a(&[true, false, true])));
    }

    #[test]
    fn nae_examples() {
        assert_eq!(
            solve_nae(&cube_formula()).unwrap(),
            Some(a(&[true, true, false, false]))
        );
        assert_eq!(
            solve_nae(&f(3, &[&[0, 1, 2]])).unwrap(),
            Some(a(&[true, true, false]))
        );
    }

    #[test]
    fn eval_examples() {
        let one = f(3, &[&[0, 1, 2]]);
        assert!(eval(&one, &a(&[true, false, false]), Mode::OneInK).unwrap());
        assert!(!eval(&one, &a(&[true, true, true]), Mode::Nae).unwrap());
        assert!(!eval(&one, &a(&[true, true, true]), Mode::OneInK).unwrap());
        assert!(eval(&one, &a(&[true, false]), Mode::Nae).is_err());
    }

    #[test]
    fn bound_is_enforced() {
        let big = PositiveFormula::new(30, vec![]).unwrap();
        assert!(matches!(solve_one_in_k(&big), Err(Error::BruteForceBound { .. })));
        assert!(solve_bounded(&big, Mode::Nae, 40).unwrap().is_some());
    }
}
