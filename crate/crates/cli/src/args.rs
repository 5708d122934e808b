use std::path::PathBuf;

use burning::graph::Format;
use burning::greedy::TieBreak;
use burning::ptas::Subscript;
use crate::bench::Suite;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "burn", version, about = "Exact, greedy, randomized and PTAS solvers for the graph burning number")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact burning number (or domination number) by exhaustive search.
    Exact(ExactArgs),
    /// Greedy 3-approximation.
    Greedy(GreedyArgs),
    /// Greedy random burning with certified bounds.
    Random(RandomArgs),
    /// Approximation scheme for forests.
    Ptas(PtasArgs),
    /// Build the domination-to-burning gadget of a graph.
    Gadget(GadgetArgs),
    /// Generate a benchmark instance.
    Gen(GenArgs),
    /// Run a benchmark suite and print its CSV summary.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// edge-list or dimacs
    #[arg(long, default_value = "edge-list")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include wall-clock times (reports are then no longer reproducible byte for byte).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Seconds allowed for exhaustive search.
    #[arg(long)]
    pub time_budget: Option<f64>,
    /// Search nodes allowed for exhaustive search.
    #[arg(long)]
    pub node_budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Largest horizon to try; defaults to the greedy bound.
    #[arg(long)]
    pub b_max: Option<usize>,
    /// Solve minimum dominating set instead.
    #[arg(long)]
    pub domination: bool,
}

#[derive(Debug, Args)]
pub struct GreedyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long, default_value = "farthest")]
    pub tie_break: TieBreak,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long, env = "BURN_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Trials per scale are ceil(c * m * ln(n + 1)).
    #[arg(long, default_value_t = 1.0)]
    pub trials_factor: f64,
    #[arg(long)]
    pub m_min: Option<usize>,
    #[arg(long)]
    pub m_max: Option<usize>,
    /// Tie-break of the greedy fallback.
    #[arg(long, default_value = "farthest")]
    pub tie_break: TieBreak,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SubscriptArg {
    Reach,
    Shallow,
}

impl From<SubscriptArg> for Subscript {
    fn from(s: SubscriptArg) -> Self {
        match s {
            SubscriptArg::Reach => Subscript::Reach,
            SubscriptArg::Shallow => Subscript::Shallow,
        }
    }
}

#[derive(Debug, Args)]
pub struct PtasArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long, conflicts_with = "a")]
    pub epsilon: Option<f64>,
    /// Rounding granularity.
    #[arg(long)]
    pub a: Option<usize>,
    /// Keep dominated cover vectors (slow; for diagnostics).
    #[arg(long)]
    pub no_prune: bool,
    /// Include the reconstructed schedule in the report.
    #[arg(long)]
    pub emit_witness: bool,
    /// How far a component may reach into hanging subtrees.
    #[arg(long, value_enum, default_value = "reach")]
    pub subscript: SubscriptArg,
}

#[derive(Debug, Args)]
pub struct GadgetArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub d: usize,
    /// Where to write the transformed graph.
    #[arg(long)]
    pub out: PathBuf,
    /// Where to write the vertex provenance tables as JSON.
    #[arg(long)]
    pub maps: Option<PathBuf>,
    /// Format of the written graph.
    #[arg(long, default_value = "edge-list")]
    pub out_format: Format,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,
    #[arg(long, env = "BURN_SEED", default_value_t = 0, global = true)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "edge-list", global = true)]
    pub format: Format,
    /// Search nodes spent on annotating the burning number.
    #[arg(long, default_value_t = 1_000_000, global = true)]
    pub exact_budget: u64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum GenKind {
    Path {
        #[arg(long)]
        n: usize,
    },
    Star {
        #[arg(long)]
        leaves: usize,
    },
    Spider {
        #[arg(long)]
        legs: usize,
        #[arg(long)]
        leg_length: usize,
    },
    Caterpillar {
        #[arg(long)]
        spine: usize,
        #[arg(long)]
        legs: usize,
    },
    RandomTree {
        #[arg(long)]
        n: usize,
    },
    RandomForest {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trees: usize,
    },
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, env = "BURN_SEED", default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Write the CSV summary here instead of stdout.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Write the per-run JSON reports here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub timings: bool,
}
