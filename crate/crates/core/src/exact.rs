//! Exhaustive solvers: the burning number and the domination number.
//!
//! Both work on `u128` vertex masks, so inputs are limited to
//! [`MAX_EXACT_VERTICES`] vertices. That is far beyond what either search can
//! finish anyway.

use std::time::Instant;

use thiserror::Error;

use crate::graph::{Ball, BurningSchedule, Graph};

pub const MAX_EXACT_VERTICES: usize = 128;

const CHECK_INTERVAL: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("exact search supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("no burning schedule with horizon at most {b_max}")]
    Exceeded { b_max: usize, nodes_explored: u64 },
    #[error("search budget exhausted after {nodes_explored} nodes")]
    BudgetExhausted { nodes_explored: u64 },
}

/// Caps on an exact search. Exhausting either yields
/// [`ExactError::BudgetExhausted`], never a wrong answer.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchLimits {
    pub node_budget: Option<u64>,
    pub deadline: Option<Instant>,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(budget: u64) -> Self {
        Self {
            node_budget: Some(budget),
            deadline: None,
        }
    }
}

/// An optimal value together with the object certifying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult<W> {
    pub value: usize,
    pub witness: W,
    pub nodes_explored: u64,
}

struct Stop;

struct Counter {
    nodes: u64,
    limits: SearchLimits,
}

impl Counter {
    fn new(limits: SearchLimits) -> Self {
        Self { nodes: 0, limits }
    }

    fn tick(&mut self) -> Result<(), Stop> {
        self.nodes += 1;
        if self.limits.node_budget.is_some_and(|b| self.nodes > b) {
            return Err(Stop);
        }
        if self.nodes.is_multiple_of(CHECK_INTERVAL)
            && self.limits.deadline.is_some_and(|d| Instant::now() >= d)
        {
            return Err(Stop);
        }
        Ok(())
    }
}

fn check_size(g: &Graph) -> Result<(), ExactError> {
    match g.vertex_count() {
        0 => Err(ExactError::EmptyGraph),
        n if n > MAX_EXACT_VERTICES => Err(ExactError::TooLarge {
            n,
            max: MAX_EXACT_VERTICES,
        }),
        _ => Ok(()),
    }
}

fn full_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

fn mask_of(vertices: impl IntoIterator<Item = usize>) -> u128 {
    vertices.into_iter().fold(0, |m, v| m | (1u128 << v))
}

fn members(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

/// The burning number of `g`, searching horizons `1..=b_max`.
pub fn exact_burning_number(
    g: &Graph,
    b_max: usize,
) -> Result<ExactResult<BurningSchedule>, ExactError> {
    exact_burning_number_with(g, b_max, SearchLimits::unlimited())
}

/// Iterative deepening on the horizon `b`. For each `b`, radii are visited
/// from `b - 1` down to `0`; each radius is either skipped or placed on a
/// center that covers at least one uncovered vertex. Any cover reduces to
/// such a sequence by dropping, in decreasing radius order, balls that add
/// nothing, so the search is complete.
pub fn exact_burning_number_with(
    g: &Graph,
    b_max: usize,
    limits: SearchLimits,
) -> Result<ExactResult<BurningSchedule>, ExactError> {
    check_size(g)?;
    let mut search = BurnSearch::new(g, b_max, limits);
    for b in 1..=b_max {
        let found = search
            .descend(b as isize - 1, 0)
            .map_err(|Stop| ExactError::BudgetExhausted {
                nodes_explored: search.counter.nodes,
            })?;
        if found {
            let balls = search
                .chosen
                .iter()
                .map(|&(center, radius)| Ball { center, radius })
                .collect();
            let witness = BurningSchedule::new(b, balls).expect("distinct radii below horizon");
            return Ok(ExactResult {
                value: b,
                witness,
                nodes_explored: search.counter.nodes,
            });
        }
    }
    Err(ExactError::Exceeded {
        b_max,
        nodes_explored: search.counter.nodes,
    })
}

struct BurnSearch {
    n: usize,
    full: u128,
    /// `balls[v][r]` for `r < b_max`.
    balls: Vec<Vec<u128>>,
    /// Largest ball size at each radius.
    max_ball: Vec<u32>,
    /// `far[v][r]`: vertices at distance more than `2r` from `v` (or unreachable).
    far: Vec<Vec<u128>>,
    chosen: Vec<(usize, usize)>,
    counter: Counter,
}

impl BurnSearch {
    fn new(g: &Graph, b_max: usize, limits: SearchLimits) -> Self {
        let n = g.vertex_count();
        let dist = g.distance_matrix();
        let radii = b_max.max(1);
        let mut balls = vec![vec![0u128; radii]; n];
        let mut far = vec![vec![0u128; radii]; n];
        for v in 0..n {
            for r in 0..radii {
                balls[v][r] = mask_of((0..n).filter(|&u| dist[v][u].is_some_and(|d| d <= r)));
                far[v][r] = mask_of((0..n).filter(|&u| dist[v][u].is_none_or(|d| d > 2 * r)));
            }
        }
        let max_ball = (0..radii)
            .map(|r| balls.iter().map(|b| b[r].count_ones()).max().unwrap_or(0))
            .collect();
        Self {
            n,
            full: full_mask(n),
            balls,
            max_ball,
            far,
            chosen: Vec::new(),
            counter: Counter::new(limits),
        }
    }

    /// Size of a greedily built set of uncovered vertices pairwise more than
    /// `2 * radius` apart; no ball of radius at most `radius` holds two of them.
    fn packing_bound(&self, uncovered: u128, radius: usize, stop_at: u32) -> u32 {
        let mut candidates = uncovered;
        let mut size = 0;
        while candidates != 0 && size < stop_at {
            let v = candidates.trailing_zeros() as usize;
            size += 1;
            candidates &= self.far[v][radius];
        }
        size
    }

    fn descend(&mut self, radius: isize, covered: u128) -> Result<bool, Stop> {
        self.counter.tick()?;
        if covered == self.full {
            return Ok(true);
        }
        if radius < 0 {
            return Ok(false);
        }
        let rho = radius as usize;
        let uncovered = self.full & !covered;
        let remaining = uncovered.count_ones();
        let capacity: u32 = self.max_ball[..=rho].iter().sum();
        if capacity < remaining {
            return Ok(false);
        }
        let balls_left = rho as u32 + 1;
        if self.packing_bound(uncovered, rho, balls_left + 1) > balls_left {
            return Ok(false);
        }

        let mut options: Vec<(usize, u128)> = (0..self.n)
            .map(|v| (v, self.balls[v][rho] & uncovered))
            .filter(|&(_, gain)| gain != 0)
            .collect();
        options.sort_by_key(|&(_, gain)| std::cmp::Reverse(gain.count_ones()));
        // A center whose fresh coverage is contained in another's is dominated.
        let mut kept: Vec<(usize, u128)> = Vec::with_capacity(options.len());
        for (v, gain) in options {
            if !kept.iter().any(|&(_, k)| gain & !k == 0) {
                kept.push((v, gain));
            }
        }

        for (v, gain) in kept {
            self.chosen.push((v, rho));
            if self.descend(radius - 1, covered | gain)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        self.descend(radius - 1, covered)
    }
}

/// Minimum dominating set by branching on the closed neighborhood of the
/// lowest-index undominated vertex.
pub fn exact_domination_number(g: &Graph) -> Result<ExactResult<Vec<usize>>, ExactError> {
    exact_domination_number_with(g, SearchLimits::unlimited())
}

pub fn exact_domination_number_with(
    g: &Graph,
    limits: SearchLimits,
) -> Result<ExactResult<Vec<usize>>, ExactError> {
    check_size(g)?;
    let n = g.vertex_count();
    let closed: Vec<u128> = (0..n)
        .map(|v| mask_of(g.neighbors(v).iter().copied()) | (1u128 << v))
        .collect();
    let mut search = DomSearch {
        full: full_mask(n),
        max_closed: closed.iter().map(|m| m.count_ones()).max().unwrap_or(1),
        closed,
        best: full_mask(n),
        current: Vec::new(),
        counter: Counter::new(limits),
    };
    search
        .descend(0)
        .map_err(|Stop| ExactError::BudgetExhausted {
            nodes_explored: search.counter.nodes,
        })?;
    let witness: Vec<usize> = members(search.best).collect();
    Ok(ExactResult {
        value: witness.len(),
        witness,
        nodes_explored: search.counter.nodes,
    })
}

struct DomSearch {
    full: u128,
    closed: Vec<u128>,
    max_closed: u32,
    best: u128,
    current: Vec<usize>,
    counter: Counter,
}

impl DomSearch {
    fn descend(&mut self, dominated: u128) -> Result<(), Stop> {
        self.counter.tick()?;
        let size = self.current.len() as u32;
        if dominated == self.full {
            if size < self.best.count_ones() {
                self.best = mask_of(self.current.iter().copied());
            }
            return Ok(());
        }
        let open = (self.full & !dominated).count_ones();
        if size + open.div_ceil(self.max_closed) >= self.best.count_ones() {
            return Ok(());
        }
        let u = (self.full & !dominated).trailing_zeros() as usize;
        let mut branches: Vec<usize> = members(self.closed[u]).collect();
        branches.sort_by_key(|&w| std::cmp::Reverse((self.closed[w] & !dominated).count_ones()));
        for w in branches {
            self.current.push(w);
            self.descend(dominated | self.closed[w])?;
            self.current.pop();
        }
        Ok(())
    }
}

/// True iff every vertex is in `set` or adjacent to a member of it.
pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    let mut dominated = vec![false; g.vertex_count()];
    for &v in set {
        dominated[v] = true;
        for &w in g.neighbors(v) {
            dominated[w] = true;
        }
    }
    dominated.into_iter().all(|d| d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_schedule;

    fn burn(g: &Graph) -> usize {
        let res = exact_burning_number(g, g.vertex_count()).unwrap();
        assert!(validate_schedule(g, &res.witness).unwrap().is_valid());
        assert_eq!(res.witness.horizon(), res.value);
        res.value
    }

    #[test]
    fn burning_examples() {
        assert_eq!(burn(&Graph::path(9)), 3);
        assert_eq!(burn(&Graph::empty(1)), 1);
        assert_eq!(burn(&Graph::path(2).disjoint_union(&Graph::path(2))), 3);
        assert_eq!(burn(&Graph::empty(4)), 4);
        assert_eq!(burn(&Graph::complete(6)), 2);
    }

    #[test]
    fn burning_errors() {
        assert_eq!(exact_burning_number(&Graph::empty(0), 3), Err(ExactError::EmptyGraph));
        assert!(matches!(
            exact_burning_number(&Graph::path(10), 3),
            Err(ExactError::Exceeded { b_max: 3, .. })
        ));
        assert!(matches!(
            exact_burning_number(&Graph::path(200), 20),
            Err(ExactError::TooLarge { n: 200, .. })
        ));
        assert!(matches!(
            exact_burning_number_with(&Graph::path(30), 10, SearchLimits::nodes(5)),
            Err(ExactError::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn domination_examples() {
        let value = |g: &Graph| {
            let res = exact_domination_number(g).unwrap();
            assert!(is_dominating(g, &res.witness));
            res.value
        };
        assert_eq!(value(&Graph::complete(4)), 1);
        assert_eq!(value(&Graph::path(4)), 2);
        assert_eq!(value(&Graph::cycle(5)), 2);
        assert_eq!(value(&Graph::empty(3)), 3);
        assert_eq!(exact_domination_number(&Graph::empty(0)), Err(ExactError::EmptyGraph));
    }
}
