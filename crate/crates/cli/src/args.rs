use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "decomp", version, about = "Exact solvers, checkers and gadget generators for graph decompositions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Input file (graph, formula or tree-like instance); JSON or text.
    #[arg(short, long, global = true)]
    pub input: Option<PathBuf>,
    /// Where to write the witness or generated instance.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Flow modulus, or the part sum for three-partition.
    #[arg(long, global = true)]
    pub k: Option<i64>,
    /// Regularity or clause width.
    #[arg(long, global = true)]
    pub r: Option<usize>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Wall-clock limit in seconds; exceeding it exits with code 2.
    #[arg(long, global = true)]
    pub time_limit: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// RunReport as JSON on stdout.
    Json,
    /// RunReport as JSON, plus a DOT drawing next to the output file.
    Dot,
    /// One human-readable line.
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Search for a witness.
    Solve {
        #[arg(value_enum)]
        problem: Problem,
        /// Input file, if not given with -i.
        file: Option<PathBuf>,
        /// Decide through the exact LP instead of search (nae and
        /// one-in-degree, graphs without cycles of length 2 mod 4 only).
        #[arg(long)]
        lp: bool,
    },
    /// Test a structural predicate.
    Check {
        #[arg(value_enum)]
        predicate: Predicate,
        file: Option<PathBuf>,
    },
    /// Build a reduction gadget.
    Gen {
        #[arg(value_enum)]
        reduction: Reduction,
        file: Option<PathBuf>,
        /// Comma-separated numbers for three-partition.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Vec<i64>,
        /// Pad a cubic formula to clause width r before building.
        #[arg(long)]
        pad: bool,
        /// Tree-like: accept any formula with a planar incidence graph.
        #[arg(long)]
        relaxed: bool,
    },
    /// Check a witness against an instance.
    Verify {
        #[arg(value_enum)]
        kind: Problem,
        instance: PathBuf,
        witness: PathBuf,
    },
    /// Run a solver over a generated family of graphs.
    Sweep {
        #[arg(value_enum)]
        family: Family,
        /// Largest number of vertices.
        #[arg(long)]
        max_n: usize,
        /// Number of graphs for random families.
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    Nae,
    OneInDegree,
    OneInDegreeWeighted,
    ZeroSumFlow,
    VertexFlow,
    NaeEdge,
    PerfectMatching,
    MinEdgeDeletion,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Bipartite,
    Regular,
    Semiregular,
    Planar,
    CycleMod4,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    TreeLike,
    ZeroSum,
    RegularBipartite,
    ThreePartition,
    Bipartition,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Connected cubic bipartite graphs, one per isomorphism class.
    CubicBipartiteNae,
    /// Seeded random r-regular bipartite graphs (r from --r, default 4).
    RandomRegularBipartiteNae,
}

impl Problem {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

impl Reduction {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

impl Predicate {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}
