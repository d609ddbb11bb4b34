use std::path::PathBuf;

use decomp_core::SolveStats;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Found,
    None,
    Infeasible,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Found => 0,
            Status::None | Status::Infeasible => 1,
            Status::Error => 2,
        }
    }
}

/// What a command produced before it is written out.
pub struct Outcome {
    pub status: Status,
    /// Written to the witness path iff the status is `Found`.
    pub witness: Option<String>,
    /// Drawing for `--format dot`.
    pub dot: Option<String>,
    /// Small verdict details kept in the report.
    pub detail: serde_json::Value,
    pub stats: SolveStats,
}

impl Outcome {
    pub fn new(status: Status, detail: serde_json::Value) -> Self {
        Outcome { status, witness: None, dot: None, detail, stats: SolveStats::default() }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// SHA-256 of the input file, hex.
    pub input_digest: Option<String>,
    pub status: Status,
    pub witness: Option<PathBuf>,
    pub wall_time_ms: f64,
    pub stats: SolveStats,
    pub detail: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunReport {
    pub fn text_line(&self) -> String {
        let mut line = format!("{:?}", self.status).to_lowercase();
        if let Some(w) = &self.witness {
            line.push_str(&format!(" witness={}", w.display()));
        }
        line.push_str(&format!(
            " nodes={} propagations={} time={:.1}ms",
            self.stats.nodes, self.stats.propagations, self.wall_time_ms
        ));
        if let Some(e) = &self.error {
            line.push_str(&format!(" error={e}"));
        }
        line
    }
}
