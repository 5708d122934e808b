//! Deterministic greedy burning: repeatedly center a ball of the next radius
//! (0, 1, 2, ...) on some uncovered vertex until nothing is left uncovered.
//!
//! The returned `r` satisfies `b(G) <= r <= 3 b(G)`: the centers of the
//! `floor(r / 3)` largest balls are pairwise at distance at least `2r / 3`,
//! so no ball of radius below `r / 3` can hold two of them.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Ball, BurningSchedule, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedyError {
    #[error("graph has no vertices")]
    EmptyGraph,
}

/// Which uncovered vertex receives the next ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// The uncovered vertex of smallest id.
    MinIndex,
    /// The uncovered vertex farthest from the covered set (vertices in
    /// untouched components count as infinitely far); ties by smallest id.
    #[default]
    Farthest,
}

impl FromStr for TieBreak {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min-index" => Ok(TieBreak::MinIndex),
            "farthest" => Ok(TieBreak::Farthest),
            other => Err(format!("unknown tie-break `{other}`")),
        }
    }
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TieBreak::MinIndex => "min-index",
            TieBreak::Farthest => "farthest",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyResult {
    pub r: usize,
    pub schedule: BurningSchedule,
    /// The `i`-th center received radius `i`.
    pub centers_in_order: Vec<usize>,
}

pub fn greedy_burning(g: &Graph, tie_break: TieBreak) -> Result<GreedyResult, GreedyError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GreedyError::EmptyGraph);
    }
    let mut covered = vec![false; n];
    let mut covered_list: Vec<usize> = Vec::new();
    let mut centers = Vec::new();
    let mut next_min = 0;
    loop {
        while next_min < n && covered[next_min] {
            next_min += 1;
        }
        if next_min == n {
            break;
        }
        let center = match tie_break {
            TieBreak::MinIndex => next_min,
            TieBreak::Farthest => {
                let dist = g.distances_from_set(&covered_list);
                (next_min..n)
                    .filter(|&v| !covered[v])
                    .max_by_key(|&v| (dist[v].unwrap_or(usize::MAX), std::cmp::Reverse(v)))
                    .expect("an uncovered vertex exists")
            }
        };
        let radius = centers.len();
        for v in g.ball(center, radius).expect("center in range") {
            if !std::mem::replace(&mut covered[v], true) {
                covered_list.push(v);
            }
        }
        centers.push(center);
    }
    let r = centers.len();
    let balls = centers
        .iter()
        .enumerate()
        .map(|(radius, &center)| Ball { center, radius })
        .collect();
    Ok(GreedyResult {
        r,
        schedule: BurningSchedule::new(r, balls).expect("radii 0..r are distinct"),
        centers_in_order: centers,
    })
}
