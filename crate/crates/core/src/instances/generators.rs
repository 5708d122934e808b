use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact::{exact_burning_number_with, SearchLimits, MAX_EXACT_VERTICES};
use crate::graph::Graph;
use crate::greedy::{greedy_burning, TieBreak};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid parameters for {kind}: {reason}")]
    InvalidParams { kind: &'static str, reason: String },
}

/// A generator family and its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceSpec {
    Path { n: usize },
    /// `K_{1,leaves}`, center 0.
    Star { leaves: usize },
    /// `legs` paths of `leg_length` edges glued at vertex 0.
    Spider { legs: usize, leg_length: usize },
    /// A path of `spine` vertices, each with `legs` pendant leaves.
    Caterpillar { spine: usize, legs: usize },
    /// Uniform random parent attachment, then a random relabeling.
    RandomTree { n: usize },
    /// `trees` random trees with `n` vertices in total.
    RandomForest { n: usize, trees: usize },
    Grid { rows: usize, cols: usize },
    Gnp { n: usize, p: f64 },
}

impl InstanceSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceSpec::Path { .. } => "path",
            InstanceSpec::Star { .. } => "star",
            InstanceSpec::Spider { .. } => "spider",
            InstanceSpec::Caterpillar { .. } => "caterpillar",
            InstanceSpec::RandomTree { .. } => "random_tree",
            InstanceSpec::RandomForest { .. } => "random_forest",
            InstanceSpec::Grid { .. } => "grid",
            InstanceSpec::Gnp { .. } => "gnp",
        }
    }

    fn is_random(&self) -> bool {
        matches!(
            self,
            InstanceSpec::RandomTree { .. } | InstanceSpec::RandomForest { .. } | InstanceSpec::Gnp { .. }
        )
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSpec::Path { n } => write!(f, "path-n{n}"),
            InstanceSpec::Star { leaves } => write!(f, "star-l{leaves}"),
            InstanceSpec::Spider { legs, leg_length } => write!(f, "spider-k{legs}-l{leg_length}"),
            InstanceSpec::Caterpillar { spine, legs } => write!(f, "caterpillar-s{spine}-l{legs}"),
            InstanceSpec::RandomTree { n } => write!(f, "random_tree-n{n}"),
            InstanceSpec::RandomForest { n, trees } => write!(f, "random_forest-n{n}-t{trees}"),
            InstanceSpec::Grid { rows, cols } => write!(f, "grid-{rows}x{cols}"),
            InstanceSpec::Gnp { n, p } => write!(f, "gnp-n{n}-p{p}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub name: String,
    pub graph: Graph,
    /// Burning number, when a closed form applies or the exact search finished.
    pub ground_truth: Option<usize>,
}

fn invalid(kind: &'static str, reason: impl Into<String>) -> GenError {
    GenError::InvalidParams {
        kind,
        reason: reason.into(),
    }
}

fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

fn relabel(n: usize, edges: Vec<(usize, usize)>, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("valid edges")
}

/// Deterministic in `(spec, seed)`; the seed is ignored by the structured families.
pub fn generate(spec: &InstanceSpec, seed: u64, exact_budget: u64) -> Result<GeneratedInstance, GenError> {
    let kind = spec.kind();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = match *spec {
        InstanceSpec::Path { n } => {
            if n == 0 {
                return Err(invalid(kind, "n must be positive"));
            }
            Graph::path(n)
        }
        InstanceSpec::Star { leaves } => {
            Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid edges")
        }
        InstanceSpec::Spider { legs, leg_length } => {
            let n = 1 + legs * leg_length;
            let edges = (0..legs).flat_map(|leg| {
                let base = 1 + leg * leg_length;
                (0..leg_length).map(move |i| (if i == 0 { 0 } else { base + i - 1 }, base + i))
            });
            Graph::from_edges(n, edges).expect("valid edges")
        }
        InstanceSpec::Caterpillar { spine, legs } => {
            if spine == 0 {
                return Err(invalid(kind, "spine must be positive"));
            }
            let n = spine * (1 + legs);
            let spine_edges = (1..spine).map(|v| (v - 1, v));
            let leg_edges = (0..spine).flat_map(|s| (0..legs).map(move |l| (s, spine + s * legs + l)));
            Graph::from_edges(n, spine_edges.chain(leg_edges)).expect("valid edges")
        }
        InstanceSpec::RandomTree { n } => {
            if n == 0 {
                return Err(invalid(kind, "n must be positive"));
            }
            let edges = random_tree_edges(n, &mut rng);
            relabel(n, edges, &mut rng)
        }
        InstanceSpec::RandomForest { n, trees } => {
            if trees == 0 || trees > n {
                return Err(invalid(kind, "need 1 <= trees <= n"));
            }
            // Random tree minus `trees - 1` random edges.
            let mut edges = random_tree_edges(n, &mut rng);
            edges.shuffle(&mut rng);
            edges.truncate(n - trees);
            relabel(n, edges, &mut rng)
        }
        InstanceSpec::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(invalid(kind, "rows and cols must be positive"));
            }
            let id = |r: usize, c: usize| r * cols + c;
            let edges = (0..rows).flat_map(|r| {
                (0..cols).flat_map(move |c| {
                    let right = (c + 1 < cols).then(|| (id(r, c), id(r, c + 1)));
                    let down = (r + 1 < rows).then(|| (id(r, c), id(r + 1, c)));
                    right.into_iter().chain(down)
                })
            });
            Graph::from_edges(rows * cols, edges).expect("valid edges")
        }
        InstanceSpec::Gnp { n, p } => {
            if n == 0 || !(0.0..=1.0).contains(&p) {
                return Err(invalid(kind, "need n > 0 and 0 <= p <= 1"));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).expect("valid edges")
        }
    };
    let name = if spec.is_random() {
        format!("{spec}-s{seed}")
    } else {
        spec.to_string()
    };
    let ground_truth = match *spec {
        InstanceSpec::Path { n } => Some(n.isqrt() + usize::from(n.isqrt().pow(2) < n)),
        InstanceSpec::Star { leaves } => Some(if leaves == 0 { 1 } else { 2 }),
        _ => ground_truth(&graph, exact_budget),
    };
    Ok(GeneratedInstance {
        name,
        graph,
        ground_truth,
    })
}

/// The exact burning number if the search finishes within `node_budget` nodes.
pub fn ground_truth(g: &Graph, node_budget: u64) -> Option<usize> {
    if g.is_empty() || g.vertex_count() > MAX_EXACT_VERTICES || node_budget == 0 {
        return None;
    }
    let upper = greedy_burning(g, TieBreak::Farthest).ok()?.r;
    exact_burning_number_with(g, upper, SearchLimits::nodes(node_budget))
        .ok()
        .map(|res| res.value)
}
