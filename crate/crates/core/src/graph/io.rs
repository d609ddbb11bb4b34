//! Graph JSON, plain edge-list text and DOT export.
//!
//! JSON: `{"n": 4, "edges": [[0,1],...], "weights": [...]?, "names": [...]?}`,
//! edges written in canonical order.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` (0-based). A weighted
//! graph appends one line `w w0 w1 ... w(n-1)`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Graph, VertexWeightedGraph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            weights: None,
            names: g.names().map(<[String]>::to_vec),
        }
    }

    pub fn from_weighted(wg: &VertexWeightedGraph) -> Self {
        GraphFile {
            weights: Some(wg.weights().to_vec()),
            ..GraphFile::from_graph(&wg.graph)
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        let g = Graph::new(self.n, self.edges.iter().map(|e| (e[0], e[1])))?;
        match &self.names {
            Some(names) => g.with_names(names.clone()),
            None => Ok(g),
        }
    }

    /// The weighted graph; fails if the file carries no weights.
    pub fn weighted(&self) -> Result<VertexWeightedGraph> {
        let weights = self
            .weights
            .clone()
            .ok_or_else(|| Error::Parse("graph has no weights".into()))?;
        VertexWeightedGraph::new(self.graph()?, weights)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph file serializes")
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("missing header".into()))?;
        let nums = parse_ints::<usize>(header)?;
        let [n, m] = nums[..] else {
            return Err(Error::Parse(format!("bad header `{header}`")));
        };
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines.next().ok_or_else(|| Error::Parse("missing edge line".into()))?;
            let pair = parse_ints::<usize>(line)?;
            let [u, v] = pair[..] else {
                return Err(Error::Parse(format!("bad edge line `{line}`")));
            };
            edges.push([u, v]);
        }
        let weights = match lines.next() {
            None => None,
            Some(line) => {
                let rest = line
                    .strip_prefix('w')
                    .ok_or_else(|| Error::Parse(format!("unexpected line `{line}`")))?;
                let w = parse_ints::<i64>(rest)?;
                if w.len() != n {
                    return Err(Error::LengthMismatch { expected: n, actual: w.len() });
                }
                Some(w)
            }
        };
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("trailing line `{extra}`")));
        }
        Ok(GraphFile { n, edges, weights, names: None })
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for [u, v] in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        if let Some(w) = &self.weights {
            out.push('w');
            for x in w {
                let _ = write!(out, " {x}");
            }
            out.push('\n');
        }
        out
    }
}

fn parse_ints<T: std::str::FromStr>(line: &str) -> Result<Vec<T>> {
    line.split_whitespace()
        .map(|t| t.parse::<T>().map_err(|_| Error::Parse(format!("bad integer `{t}`"))))
        .collect()
}

/// Optional coloring overlays for [`to_dot`].
#[derive(Clone, Debug, Default)]
pub struct DotStyle<'a> {
    /// Vertices in the part are filled; others left white.
    pub vertex_part: Option<&'a [bool]>,
    /// Per-edge color names aligned to edge ids.
    pub edge_colors: Option<&'a [&'a str]>,
    /// Per-edge labels aligned to edge ids.
    pub edge_labels: Option<&'a [i64]>,
}

pub fn to_dot(g: &Graph, style: &DotStyle<'_>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let label = g.names().map_or_else(|| v.to_string(), |n| n[v].clone());
        let fill = match style.vertex_part {
            Some(part) if part[v] => ", style=filled, fillcolor=gray40, fontcolor=white",
            _ => "",
        };
        let _ = writeln!(out, "  {v} [label=\"{label}\"{fill}];");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut attrs = Vec::new();
        if let Some(c) = style.edge_colors {
            attrs.push(format!("color={}", c[e]));
        }
        if let Some(l) = style.edge_labels {
            attrs.push(format!("label=\"{}\"", l[e]));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {u} -- {v};");
        } else {
            let _ = writeln!(out, "  {u} -- {v} [{}];", attrs.join(", "));
        }
    }
    out.push_str("}\n");
    out
}
