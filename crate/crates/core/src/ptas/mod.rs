//! Approximation scheme for the burning number of forests.
//!
//! Radii are rounded up to multiples of a granularity `a`: slot `i` of a
//! burning schedule becomes `a * ceil(i / a)`, which lies in `[i, i + a - 1]`.
//! Consequently
//!
//! * if `b(G) <= b`, some sub-multiset of `{ a ceil(i/a) : i < b }` is a cover;
//! * if such a sub-multiset is a cover, `b(G) <= b + a - 1`.
//!
//! Covers using only multiples of `a` are enumerated exactly by the dynamic
//! program in [`dp`]; the smallest `b` whose rounded multiset admits one of
//! them brackets the burning number within `a - 1`. Choosing
//! `a = max(1, floor(eps * r / 3))` for the greedy bound `r` makes that
//! additive slack at most `eps * b(G)`.

pub mod cover;
pub mod dp;

use serde::Serialize;
use thiserror::Error;

pub use cover::{fits, rounded_multiset, CoverSet, CoverVector, RadiusClasses, SetOptions, Trace};
pub use dp::{cover_sets, cover_tables, forest_covers, CoverTables, DpOptions, DpStats, Subscript};

use crate::graph::{Ball, BurningSchedule, Graph, RootedForest};
use crate::greedy::{greedy_burning, TieBreak};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PtasError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not a forest")]
    NotAForest,
    #[error("invalid radius classes: granularity {granularity}, {class_count} classes")]
    InvalidClasses {
        granularity: usize,
        class_count: usize,
    },
    #[error("class count mismatch: {left} vs {right}")]
    ClassMismatch { left: usize, right: usize },
    #[error("horizon {b} needs radii beyond the largest class radius {max_radius}")]
    OutOfRange { b: usize, max_radius: usize },
    #[error("cover set grew to {size} vectors, above the cap of {max}")]
    SetTooLarge { size: usize, max: usize },
    #[error("no cover found with horizon at most {horizon}")]
    NoCover { horizon: usize },
    #[error("epsilon must be positive and finite")]
    InvalidEpsilon,
}

/// How the rounding granularity is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Granularity {
    /// `a = max(1, floor(eps * r_greedy / 3))`.
    Epsilon(f64),
    Explicit(usize),
}

pub fn granularity_for_epsilon(epsilon: f64, greedy_r: usize) -> usize {
    ((epsilon * greedy_r as f64 / 3.0).floor() as usize).max(1)
}

#[derive(Debug, Clone, Serialize)]
pub struct PtasResult {
    pub a: usize,
    pub class_count: usize,
    pub greedy_r: usize,
    /// Smallest `b` whose rounded multiset admits a cover; `b_star <= b(G)`.
    pub b_star: usize,
    /// `b_star + a - 1 >= b(G)`, the horizon of `schedule`.
    pub upper: usize,
    /// The cover realizing `b_star`, as counts per class.
    pub cover: CoverVector,
    pub schedule: BurningSchedule,
    pub stats: DpStats,
}

impl PtasResult {
    pub fn interval(&self) -> (usize, usize) {
        (self.b_star, self.upper)
    }
}

pub fn ptas_burning(
    g: &Graph,
    granularity: Granularity,
    opts: DpOptions,
) -> Result<PtasResult, PtasError> {
    if g.is_empty() {
        return Err(PtasError::EmptyGraph);
    }
    let forest = RootedForest::new(g).map_err(|_| PtasError::NotAForest)?;
    let greedy_r = greedy_burning(g, TieBreak::Farthest)
        .map_err(|_| PtasError::EmptyGraph)?
        .r;
    let a = match granularity {
        Granularity::Explicit(0) => {
            return Err(PtasError::InvalidClasses {
                granularity: 0,
                class_count: 0,
            })
        }
        Granularity::Explicit(a) => a,
        Granularity::Epsilon(eps) if eps.is_finite() && eps > 0.0 => {
            granularity_for_epsilon(eps, greedy_r)
        }
        Granularity::Epsilon(_) => return Err(PtasError::InvalidEpsilon),
    };
    let classes = RadiusClasses::for_horizon(a, greedy_r)?;
    let (covers, stats) = forest_covers(&forest, classes, opts)?;

    for b in 1..=greedy_r {
        let budget = rounded_multiset(&classes, b)?;
        if let Some((cover, trace)) = covers.find_fitting(&budget) {
            let schedule = assign_slots(&classes, b, trace)?;
            return Ok(PtasResult {
                a,
                class_count: classes.class_count(),
                greedy_r,
                b_star: b,
                upper: b + a - 1,
                cover: cover.clone(),
                schedule,
                stats,
            });
        }
    }
    // Unreachable with `Subscript::Reach`: the greedy schedule itself rounds to
    // a cover within its horizon.
    Err(PtasError::NoCover { horizon: greedy_r })
}

/// Matches the traced balls, largest first, to slots `i < b` ordered by their
/// rounded value, and burns each with radius `i + a - 1 >= a * ceil(i / a)`.
fn assign_slots(classes: &RadiusClasses, b: usize, trace: &Trace) -> Result<BurningSchedule, PtasError> {
    let a = classes.granularity();
    let mut balls = trace.balls();
    balls.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
    let mut slots: Vec<usize> = (0..b).collect();
    slots.sort_by(|&x, &y| classes.round_up(y).cmp(&classes.round_up(x)).then(y.cmp(&x)));
    let placed = balls
        .iter()
        .zip(&slots)
        .map(|(&(center, class), &slot)| {
            debug_assert!(classes.round_up(slot) >= class);
            Ball {
                center,
                radius: slot + a - 1,
            }
        })
        .collect();
    Ok(BurningSchedule::new(b + a - 1, placed).expect("distinct slots below the horizon"))
}
