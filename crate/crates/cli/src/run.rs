use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use decomp_core::decomp::{
    solve_nae_with_stats, solve_one_in_degree_weighted_with_stats, solve_one_in_degree_with_stats,
    verify_nae, verify_one_in_degree, verify_one_in_degree_weighted,
};
use decomp_core::edge_color::{nae_edge_coloring, one_in_degree_edge, verify_nae_edge, Matching, TwoEdgeColoring};
use decomp_core::enumerate::{for_each_regular_bipartite, random_regular_bipartite, MAX_SMALL};
use decomp_core::flow::{
    solve_vertex_zero_sum_with_stats, solve_zero_sum_with_stats, verify_vertex_zero_sum, verify_zero_sum,
    EdgeLabeling, VertexLabeling,
};
use decomp_core::graph::io::{to_dot, DotStyle, GraphFile};
use decomp_core::graph::{degree_profile, has_cycle_2_mod_4, is_bipartite, odd_cycle, planar_embedding};
use decomp_core::lp::{decide_nae_poly, decide_one_in_degree_poly};
use decomp_core::reductions::{
    gen_bipartition_instance, gen_regular_bipartite, gen_three_partition_graph, gen_zero_sum_instance,
    make_tree_like, make_tree_like_relaxed, min_edge_deletion_bipartition, pad_formula, EdgeDeletion,
};
use decomp_core::{Decomposition, Graph, PositiveFormula, TreeLikeInstance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::args::{Command, Family, Global, Predicate, Problem, Reduction};
use crate::report::{Outcome, Status};

/// Largest vertex count accepted by the random sweep.
pub const RANDOM_SWEEP_MAX_N: usize = 2000;

pub type CmdResult = Result<Outcome, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn to_line<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string(x).expect("witness serializes");
    s.push('\n');
    s
}

/// The input path: the positional file if given, else `-i`.
pub fn input_path(cmd: &Command, global: &Global) -> Option<PathBuf> {
    let positional = match cmd {
        Command::Solve { file, .. } | Command::Check { file, .. } | Command::Gen { file, .. } => file.clone(),
        Command::Verify { instance, .. } => Some(instance.clone()),
        Command::Sweep { .. } => None,
    };
    positional.or_else(|| global.input.clone())
}

/// `-o` if given, else a name derived from the input next to it, else a
/// name in the working directory.
pub fn output_path(cmd: &Command, global: &Global) -> Option<PathBuf> {
    if let Some(o) = &global.output {
        return Some(o.clone());
    }
    let name = match cmd {
        Command::Solve { problem, .. } => problem.name(),
        Command::Check { predicate, .. } => predicate.name(),
        Command::Gen { reduction, .. } => reduction.name(),
        Command::Verify { .. } => return None,
        Command::Sweep { .. } => "sweep".to_string(),
    };
    match input_path(cmd, global) {
        Some(input) => {
            let stem = input.file_stem().map_or("out".into(), |s| s.to_string_lossy().into_owned());
            Some(input.with_file_name(format!("{stem}.{name}.json")))
        }
        None => Some(PathBuf::from(format!("{name}.json"))),
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_graph_file(path: &Path) -> Result<GraphFile, String> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        GraphFile::from_json(&text).map_err(err)
    } else {
        GraphFile::from_edge_list(&text).map_err(err)
    }
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    load_graph_file(path)?.graph().map_err(err)
}

fn load_formula(path: &Path) -> Result<PositiveFormula, String> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        PositiveFormula::from_json(&text).map_err(err)
    } else {
        PositiveFormula::from_mcnf(&text).map_err(err)
    }
}

/// A tree-like instance file, or a formula to make tree-like.
fn load_tree_like(path: &Path, relaxed: bool) -> Result<TreeLikeInstance, String> {
    let text = read(path)?;
    let value: Option<serde_json::Value> = serde_json::from_str(&text).ok();
    if value.as_ref().is_some_and(|v| v.get("clause_tree_edges").is_some()) {
        return serde_json::from_str(&text).map_err(err);
    }
    let f = load_formula(path)?;
    if relaxed {
        make_tree_like_relaxed(&f).map_err(err)
    } else {
        make_tree_like(&f).map_err(err)
    }
}

fn need_input(input: &Option<PathBuf>) -> Result<&Path, String> {
    input.as_deref().ok_or_else(|| "no input file given".to_string())
}

pub fn execute(cmd: &Command, global: &Global) -> CmdResult {
    let input = input_path(cmd, global);
    match cmd {
        Command::Solve { problem, lp, .. } => solve(*problem, need_input(&input)?, global, *lp),
        Command::Check { predicate, .. } => check(*predicate, need_input(&input)?, global),
        Command::Gen { reduction, a, pad, relaxed, .. } => gen(*reduction, input.as_deref(), global, a, *pad, *relaxed),
        Command::Verify { kind, instance, witness } => verify(*kind, instance, witness, global),
        Command::Sweep { family, max_n, count } => sweep(*family, *max_n, *count, global),
    }
}

fn flow_k(global: &Global) -> i64 {
    global.k.unwrap_or(3)
}

fn part_of(g: &Graph, d: &Decomposition) -> Vec<bool> {
    d.indicator(g.n()).expect("solver output is in range")
}

fn decomposition_outcome(g: &Graph, d: Option<Decomposition>, stats: decomp_core::SolveStats) -> Outcome {
    let mut out = match &d {
        Some(d) => {
            let mut o = Outcome::new(Status::Found, json!({ "size_a": d.part_a().len() }));
            o.witness = Some(to_line(d));
            let part = part_of(g, d);
            o.dot = Some(to_dot(g, &DotStyle { vertex_part: Some(&part), ..Default::default() }));
            o
        }
        None => Outcome::new(Status::None, json!({})),
    };
    out.stats = stats;
    out
}

fn solve(problem: Problem, path: &Path, global: &Global, lp: bool) -> CmdResult {
    let file = load_graph_file(path)?;
    let g = file.graph().map_err(err)?;
    if lp {
        let decided = match problem {
            Problem::Nae => decide_nae_poly(&g),
            Problem::OneInDegree => decide_one_in_degree_poly(&g),
            _ => return Err(format!("--lp is not available for {}", problem.name())),
        }
        .map_err(err)?;
        let mut out = decomposition_outcome(&g, decided, Default::default());
        if out.status == Status::None {
            out.status = Status::Infeasible;
        }
        return Ok(out);
    }
    Ok(match problem {
        Problem::Nae => {
            let (d, s) = solve_nae_with_stats(&g);
            decomposition_outcome(&g, d, s)
        }
        Problem::OneInDegree => {
            let (d, s) = solve_one_in_degree_with_stats(&g);
            decomposition_outcome(&g, d, s)
        }
        Problem::OneInDegreeWeighted => {
            let wg = file.weighted().map_err(err)?;
            let (d, s) = solve_one_in_degree_weighted_with_stats(&wg);
            decomposition_outcome(&g, d, s)
        }
        Problem::ZeroSumFlow => {
            let (lab, s) = solve_zero_sum_with_stats(&g, flow_k(global)).map_err(err)?;
            let mut out = match lab {
                Some(lab) => {
                    let mut o = Outcome::new(Status::Found, json!({ "k": flow_k(global) }));
                    o.dot = Some(to_dot(&g, &DotStyle { edge_labels: Some(&lab.labels), ..Default::default() }));
                    o.witness = Some(to_line(&lab));
                    o
                }
                None => Outcome::new(Status::None, json!({ "k": flow_k(global) })),
            };
            out.stats = s;
            out
        }
        Problem::VertexFlow => {
            let (lab, s) = solve_vertex_zero_sum_with_stats(&g, flow_k(global)).map_err(err)?;
            let mut out = match lab {
                Some(lab) => {
                    let mut o = Outcome::new(Status::Found, json!({ "k": flow_k(global) }));
                    o.witness = Some(to_line(&lab));
                    o.dot = Some(to_dot(&g, &DotStyle::default()));
                    o
                }
                None => Outcome::new(Status::None, json!({ "k": flow_k(global) })),
            };
            out.stats = s;
            out
        }
        Problem::NaeEdge => match nae_edge_coloring(&g).map_err(err)? {
            Some(c) => {
                let mut o = Outcome::new(Status::Found, json!({}));
                let names: Vec<&str> = c.colors.iter().map(|c| c.name()).collect();
                o.dot = Some(to_dot(&g, &DotStyle { edge_colors: Some(&names), ..Default::default() }));
                o.witness = Some(to_line(&c));
                o
            }
            None => Outcome::new(Status::None, json!({})),
        },
        Problem::PerfectMatching => match one_in_degree_edge(&g) {
            Some(m) => {
                let mut o = Outcome::new(Status::Found, json!({ "edges": m.edges.len() }));
                o.dot = Some(matching_dot(&g, &m.edges));
                o.witness = Some(to_line(&m));
                o
            }
            None => Outcome::new(Status::None, json!({})),
        },
        Problem::MinEdgeDeletion => {
            let d = min_edge_deletion_bipartition(&g);
            let mut o = Outcome::new(Status::Found, json!({ "count": d.count }));
            o.dot = Some(matching_dot(&g, &d.edges));
            o.witness = Some(to_line(&d));
            o
        }
    })
}

/// Marked edges red, others black.
fn matching_dot(g: &Graph, marked: &[usize]) -> String {
    let names: Vec<&str> = (0..g.m()).map(|e| if marked.contains(&e) { "red" } else { "black" }).collect();
    to_dot(g, &DotStyle { edge_colors: Some(&names), ..Default::default() })
}

fn check(predicate: Predicate, path: &Path, global: &Global) -> CmdResult {
    let g = load_graph(path)?;
    let holds = |b: bool| if b { Status::Found } else { Status::None };
    Ok(match predicate {
        Predicate::Bipartite => match is_bipartite(&g) {
            Some(b) => {
                let mut o = Outcome::new(Status::Found, json!({}));
                o.witness = Some(to_line(&b));
                o
            }
            None => Outcome::new(Status::None, json!({ "odd_cycle": odd_cycle(&g) })),
        },
        Predicate::Regular => {
            let p = degree_profile(&g).map_err(err)?;
            let ok = match global.r {
                Some(r) => p.regular == Some(r),
                None => p.regular.is_some(),
            };
            Outcome::new(holds(ok), json!({ "profile": p }))
        }
        Predicate::Semiregular => {
            let p = degree_profile(&g).map_err(err)?;
            let ok = match global.r {
                Some(d) => p.semiregular == Some(d) || p.regular == Some(d + 1),
                None => p.semiregular.is_some(),
            };
            Outcome::new(holds(ok), json!({ "profile": p }))
        }
        Predicate::Planar => match planar_embedding(&g) {
            Some(e) => {
                let mut o = Outcome::new(Status::Found, json!({}));
                o.witness = Some(to_line(&e));
                o
            }
            None => Outcome::new(Status::None, json!({})),
        },
        Predicate::CycleMod4 => {
            let rep = has_cycle_2_mod_4(&g);
            if rep.has_bad_cycle {
                let mut o = Outcome::new(Status::Found, json!({ "cycles_enumerated": rep.cycles_enumerated }));
                o.witness = Some(to_line(&rep.witness));
                o
            } else if rep.exhausted {
                Outcome::new(Status::None, json!({ "cycles_enumerated": rep.cycles_enumerated, "exhausted": true }))
            } else {
                return Err(format!("cycle cap reached after {} cycles without a verdict", rep.cycles_enumerated));
            }
        }
    })
}

fn gen(
    reduction: Reduction,
    input: Option<&Path>,
    global: &Global,
    a: &[i64],
    pad: bool,
    relaxed: bool,
) -> CmdResult {
    let input = || input.ok_or_else(|| "no input file given".to_string());
    let (text, g) = match reduction {
        Reduction::TreeLike => {
            let t = load_tree_like(input()?, relaxed)?;
            let g = t.combined_graph();
            (to_line(&t), g)
        }
        Reduction::ZeroSum => {
            let t = load_tree_like(input()?, relaxed)?;
            let gz = gen_zero_sum_instance(&t).map_err(err)?;
            (gz.instance.to_json() + "\n", gz.instance.graph)
        }
        Reduction::RegularBipartite => {
            let r = global.r.unwrap_or(3);
            let mut f = load_formula(input()?)?;
            if pad {
                f = pad_formula(&f, r).map_err(err)?;
            }
            let gr = gen_regular_bipartite(&f, r).map_err(err)?;
            (gr.instance.to_json() + "\n", gr.instance.graph)
        }
        Reduction::ThreePartition => {
            let k = global.k.ok_or("three-partition needs --k")?;
            if a.is_empty() {
                return Err("three-partition needs --a".into());
            }
            let gt = gen_three_partition_graph(a, k).map_err(err)?;
            (gt.instance.to_json() + "\n", gt.instance.graph)
        }
        Reduction::Bipartition => {
            let f = load_formula(input()?)?;
            let gi = gen_bipartition_instance(&f).map_err(err)?;
            (gi.to_json() + "\n", gi.graph)
        }
    };
    let mut o = Outcome::new(Status::Found, json!({ "n": g.n(), "m": g.m() }));
    o.dot = Some(to_dot(&g, &DotStyle::default()));
    o.witness = Some(text);
    Ok(o)
}

fn parse_witness<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    serde_json::from_str(&read(path)?).map_err(|e| format!("bad witness {}: {e}", path.display()))
}

fn verify(kind: Problem, instance: &Path, witness: &Path, global: &Global) -> CmdResult {
    let file = load_graph_file(instance)?;
    let g = file.graph().map_err(err)?;
    let (valid, detail) = match kind {
        Problem::Nae => (verify_nae(&g, &parse_witness(witness)?).map_err(err)?, json!({})),
        Problem::OneInDegree => (verify_one_in_degree(&g, &parse_witness(witness)?).map_err(err)?, json!({})),
        Problem::OneInDegreeWeighted => {
            let wg = file.weighted().map_err(err)?;
            (verify_one_in_degree_weighted(&wg, &parse_witness(witness)?).map_err(err)?, json!({}))
        }
        Problem::ZeroSumFlow => {
            let lab: EdgeLabeling = parse_witness(witness)?;
            (verify_zero_sum(&g, &lab, flow_k(global)).map_err(err)?, json!({ "k": flow_k(global) }))
        }
        Problem::VertexFlow => {
            let lab: VertexLabeling = parse_witness(witness)?;
            (verify_vertex_zero_sum(&g, &lab, flow_k(global)).map_err(err)?, json!({ "k": flow_k(global) }))
        }
        Problem::NaeEdge => {
            let c: TwoEdgeColoring = parse_witness(witness)?;
            (verify_nae_edge(&g, &c).map_err(err)?, json!({}))
        }
        Problem::PerfectMatching => {
            let m: Matching = parse_witness(witness)?;
            (m.is_perfect_for(&g), json!({}))
        }
        Problem::MinEdgeDeletion => {
            let d: EdgeDeletion = parse_witness(witness)?;
            let mut edges = d.edges.clone();
            edges.sort_unstable();
            edges.dedup();
            let in_range = edges.iter().all(|&e| e < g.m());
            let valid = in_range && edges.len() == d.edges.len() && d.count == edges.len() && {
                let keep: Vec<usize> = (0..g.m()).filter(|e| edges.binary_search(e).is_err()).collect();
                is_bipartite(&g.edge_subgraph(&keep)).is_some()
            };
            (valid, json!({ "optimality_checked": false }))
        }
    };
    Ok(Outcome::new(if valid { Status::Found } else { Status::None }, detail))
}

#[derive(Serialize)]
struct SweepListing {
    family: String,
    /// Graphs examined per vertex count.
    counts: BTreeMap<usize, u64>,
    counterexamples: Vec<GraphFile>,
}

fn sweep(family: Family, max_n: usize, count: usize, global: &Global) -> CmdResult {
    let mut listing = SweepListing { family: String::new(), counts: BTreeMap::new(), counterexamples: Vec::new() };
    let mut stats = decomp_core::SolveStats::default();
    match family {
        Family::CubicBipartiteNae => {
            if max_n > MAX_SMALL {
                return Err(format!("--max-n {max_n} exceeds the bound {MAX_SMALL}"));
            }
            listing.family = "cubic-bipartite-nae".into();
            for k in 3..=max_n / 2 {
                let mut seen = 0;
                for_each_regular_bipartite(k, 3, |sg| {
                    seen += 1;
                    let g = sg.to_graph();
                    let (d, s) = solve_nae_with_stats(&g);
                    stats.absorb(s);
                    if d.is_none() {
                        listing.counterexamples.push(GraphFile::from_graph(&g));
                    }
                })
                .map_err(err)?;
                listing.counts.insert(2 * k, seen);
            }
        }
        Family::RandomRegularBipartiteNae => {
            if max_n > RANDOM_SWEEP_MAX_N {
                return Err(format!("--max-n {max_n} exceeds the bound {RANDOM_SWEEP_MAX_N}"));
            }
            let r = global.r.unwrap_or(4);
            if 2 * r > max_n {
                return Err(format!("--max-n {max_n} leaves no room for an {r}-regular bipartite graph"));
            }
            listing.family = format!("random-{r}-regular-bipartite-nae");
            let mut rng = ChaCha8Rng::seed_from_u64(global.seed);
            for _ in 0..count {
                let k = rand::Rng::gen_range(&mut rng, r..=max_n / 2);
                let g = random_regular_bipartite(k, r, &mut rng).map_err(err)?;
                let (d, s) = solve_nae_with_stats(&g);
                stats.absorb(s);
                *listing.counts.entry(2 * k).or_default() += 1;
                if d.is_none() {
                    listing.counterexamples.push(GraphFile::from_graph(&g));
                }
            }
        }
    }
    let total: u64 = listing.counts.values().sum();
    let bad = listing.counterexamples.len();
    let status = if bad == 0 { Status::Found } else { Status::None };
    let mut o = Outcome::new(status, json!({ "graphs": total, "counterexamples": bad, "counts": listing.counts }));
    o.witness = Some(to_line(&listing));
    o.stats = stats;
    Ok(o)
}
