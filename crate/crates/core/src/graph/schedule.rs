use serde::Serialize;
use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Ball {
    pub center: usize,
    pub radius: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScheduleError {
    #[error("horizon must be positive")]
    ZeroHorizon,
    #[error("radius {radius} is not below the horizon {horizon}")]
    RadiusOutOfRange { radius: usize, horizon: usize },
    #[error("radius {0} is used more than once")]
    DuplicateRadius(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Balls with pairwise distinct radii below `horizon`.
///
/// A schedule whose balls cover the graph certifies `b(G) <= horizon`. Radii
/// need not exhaust `0..horizon`: an unused slot only forgoes coverage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BurningSchedule {
    horizon: usize,
    balls: Vec<Ball>,
}

impl BurningSchedule {
    pub fn new(horizon: usize, mut balls: Vec<Ball>) -> Result<Self, ScheduleError> {
        if horizon == 0 {
            return Err(ScheduleError::ZeroHorizon);
        }
        let mut used = vec![false; horizon];
        for ball in &balls {
            if ball.radius >= horizon {
                return Err(ScheduleError::RadiusOutOfRange {
                    radius: ball.radius,
                    horizon,
                });
            }
            if std::mem::replace(&mut used[ball.radius], true) {
                return Err(ScheduleError::DuplicateRadius(ball.radius));
            }
        }
        balls.sort_by_key(|b| std::cmp::Reverse(b.radius));
        Ok(Self { horizon, balls })
    }

    /// Convenience constructor from `(center, radius)` pairs.
    pub fn from_pairs(
        horizon: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ScheduleError> {
        let balls = pairs
            .into_iter()
            .map(|(center, radius)| Ball { center, radius })
            .collect();
        Self::new(horizon, balls)
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Balls in decreasing radius order.
    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    /// The vertices lit at times `1, 2, ..., horizon` in the burning process;
    /// `None` for an unused slot. The vertex lit at time `t` burns with radius
    /// `horizon - t` at the end.
    pub fn ignition_order(&self) -> Vec<Option<usize>> {
        let mut order = vec![None; self.horizon];
        for ball in &self.balls {
            order[self.horizon - 1 - ball.radius] = Some(ball.center);
        }
        order
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScheduleCheck {
    Valid,
    /// Sorted list of vertices no ball reaches.
    Uncovered(Vec<usize>),
}

impl ScheduleCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, ScheduleCheck::Valid)
    }
}

/// Checks that the balls of `schedule` cover every vertex of `g`.
///
/// Propagates the largest remaining radius outward from all centers at once,
/// bucketed by radius, so each vertex is settled once.
pub fn validate_schedule(g: &Graph, schedule: &BurningSchedule) -> Result<ScheduleCheck, ScheduleError> {
    for ball in schedule.balls() {
        g.check_vertex(ball.center)?;
    }
    let n = g.vertex_count();
    let mut reach: Vec<Option<usize>> = vec![None; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); schedule.horizon()];
    for ball in schedule.balls() {
        if reach[ball.center].is_none_or(|r| r < ball.radius) {
            reach[ball.center] = Some(ball.radius);
            buckets[ball.radius].push(ball.center);
        }
    }
    for level in (1..schedule.horizon()).rev() {
        let frontier = std::mem::take(&mut buckets[level]);
        for u in frontier {
            if reach[u] != Some(level) {
                continue;
            }
            for &w in g.neighbors(u) {
                if reach[w].is_none_or(|r| r < level - 1) {
                    reach[w] = Some(level - 1);
                    buckets[level - 1].push(w);
                }
            }
        }
    }
    let uncovered: Vec<usize> = (0..n).filter(|&v| reach[v].is_none()).collect();
    Ok(if uncovered.is_empty() {
        ScheduleCheck::Valid
    } else {
        ScheduleCheck::Uncovered(uncovered)
    })
}
