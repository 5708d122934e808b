//! Greedy random burning and the certified upper bounds it produces.
//!
//! A trial repeatedly centers a ball of radius drawn uniformly from `[0, m]`
//! on the smallest uncovered vertex. The sequence of radii it used is then
//! matched injectively into integer slots `0..r` with each slot at least the
//! floored radius it receives; the smallest such `r` is a certified upper
//! bound on the burning number, because growing a ball never uncovers
//! anything.
//!
//! [`randomized_approx`] sweeps every integer `m` in a range, runs
//! `ceil(c * m * ln(n + 1))` trials per value and keeps the best certificate,
//! never reporting worse than the greedy bound.

use std::cmp::Ordering;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Ball, BurningSchedule, Graph};
use crate::greedy::{greedy_burning, TieBreak};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RandomError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("radius scale m must be positive and finite, got {0}")]
    InvalidScale(f64),
    #[error("radius at position {index} is negative or not a number: {value}")]
    InvalidRadius { index: usize, value: f64 },
    #[error("certificate does not match trial: {0}")]
    CertificateMismatch(String),
    #[error("empty sweep: m_min = {m_min} exceeds m_max = {m_max}")]
    EmptySweep { m_min: usize, m_max: usize },
    #[error("trials factor must be positive and finite, got {0}")]
    InvalidTrialsFactor(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Placement {
    pub center: usize,
    pub raw_radius: f64,
}

impl Placement {
    /// The integer radius that determines coverage.
    pub fn floored(&self) -> usize {
        self.raw_radius.floor() as usize
    }
}

/// One run of greedy random burning.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub m: f64,
    pub placements: Vec<Placement>,
    pub seed: u64,
}

impl TrialOutcome {
    pub fn raw_radii(&self) -> Vec<f64> {
        self.placements.iter().map(|p| p.raw_radius).collect()
    }
}

/// Slots `assignment[i]` in `0..r`, pairwise distinct, each at least the
/// floor of the `i`-th radius.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationCertificate {
    pub r: usize,
    pub assignment: Vec<usize>,
}

/// Truncated BFS with a reusable visit stamp.
struct BallScratch {
    stamp: Vec<u32>,
    epoch: u32,
    frontier: Vec<usize>,
    next: Vec<usize>,
}

impl BallScratch {
    fn new(n: usize) -> Self {
        Self {
            stamp: vec![0; n],
            epoch: 0,
            frontier: Vec::new(),
            next: Vec::new(),
        }
    }

    fn visit(&mut self, g: &Graph, center: usize, radius: usize, mut f: impl FnMut(usize)) {
        self.epoch += 1;
        let epoch = self.epoch;
        self.stamp[center] = epoch;
        f(center);
        self.frontier.clear();
        self.frontier.push(center);
        for _ in 0..radius {
            self.next.clear();
            for &u in &self.frontier {
                for &w in g.neighbors(u) {
                    if self.stamp[w] != epoch {
                        self.stamp[w] = epoch;
                        f(w);
                        self.next.push(w);
                    }
                }
            }
            if self.next.is_empty() {
                break;
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
    }
}

/// One greedy random burning run. Deterministic in `(g, m, seed)`.
pub fn random_trial(g: &Graph, m: f64, seed: u64) -> Result<TrialOutcome, RandomError> {
    if g.is_empty() {
        return Err(RandomError::EmptyGraph);
    }
    if !(m.is_finite() && m > 0.0) {
        return Err(RandomError::InvalidScale(m));
    }
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut covered = vec![false; n];
    let mut scratch = BallScratch::new(n);
    let mut placements = Vec::new();
    let mut next_uncovered = 0;
    loop {
        while next_uncovered < n && covered[next_uncovered] {
            next_uncovered += 1;
        }
        if next_uncovered == n {
            break;
        }
        let raw_radius = rng.gen_range(0.0..=m);
        let placement = Placement {
            center: next_uncovered,
            raw_radius,
        };
        scratch.visit(g, placement.center, placement.floored(), |v| covered[v] = true);
        placements.push(placement);
    }
    Ok(TrialOutcome {
        m,
        placements,
        seed,
    })
}

/// `count` independent draws from `U[0, m]`, as consumed by one trial with
/// the same seed.
pub fn sample_radii(m: f64, count: usize, seed: u64) -> Result<Vec<f64>, RandomError> {
    if !(m.is_finite() && m > 0.0) {
        return Err(RandomError::InvalidScale(m));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(|_| rng.gen_range(0.0..=m)).collect())
}

/// Smallest `r` such that `radii` is dominated by `(0, 1, ..., r - 1)`.
///
/// With floors sorted decreasingly as `f_1 >= f_2 >= ...`, the answer is
/// `max_i (f_i + i)` and the `i`-th largest is assigned slot `r - i`.
pub fn min_domination_bound(radii: &[f64]) -> Result<DominationCertificate, RandomError> {
    if let Some((index, &value)) = radii
        .iter()
        .enumerate()
        .find(|(_, x)| x.is_nan() || **x < 0.0 || x.is_infinite())
    {
        return Err(RandomError::InvalidRadius { index, value });
    }
    let floors: Vec<usize> = radii.iter().map(|x| x.floor() as usize).collect();
    let mut order: Vec<usize> = (0..floors.len()).collect();
    order.sort_by(|&a, &b| floors[b].cmp(&floors[a]).then(a.cmp(&b)));
    let r = order
        .iter()
        .enumerate()
        .map(|(i, &idx)| floors[idx] + i + 1)
        .max()
        .unwrap_or(0);
    let mut assignment = vec![0; floors.len()];
    for (i, &idx) in order.iter().enumerate() {
        assignment[idx] = r - (i + 1);
    }
    Ok(DominationCertificate { r, assignment })
}

/// Re-radius the trial's balls to their certificate slots.
pub fn outcome_to_schedule(
    trial: &TrialOutcome,
    cert: &DominationCertificate,
) -> Result<BurningSchedule, RandomError> {
    if cert.assignment.len() != trial.placements.len() {
        return Err(RandomError::CertificateMismatch(format!(
            "{} slots for {} placements",
            cert.assignment.len(),
            trial.placements.len()
        )));
    }
    let mut balls = Vec::with_capacity(cert.assignment.len());
    for (i, (p, &slot)) in trial.placements.iter().zip(&cert.assignment).enumerate() {
        if slot < p.floored() {
            return Err(RandomError::CertificateMismatch(format!(
                "placement {i} has radius {} but slot {slot}",
                p.floored()
            )));
        }
        balls.push(Ball {
            center: p.center,
            radius: slot,
        });
    }
    BurningSchedule::new(cert.r, balls).map_err(|e| RandomError::CertificateMismatch(e.to_string()))
}

/// Seed for trial `index` at scale `m`, derived from the master seed alone so
/// results do not depend on execution order.
pub fn trial_seed(master: u64, m: usize, index: usize) -> u64 {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&master.to_le_bytes());
    key[8..16].copy_from_slice(&(m as u64).to_le_bytes());
    key[16..24].copy_from_slice(&(index as u64).to_le_bytes());
    ChaCha8Rng::from_seed(key).next_u64()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RandomConfig {
    /// The constant `c` in `ceil(c * m * ln(n + 1))` trials per `m`.
    pub trials_factor: f64,
    pub seed: u64,
    /// Defaults to 1.
    pub m_min: Option<usize>,
    /// Defaults to the greedy bound.
    pub m_max: Option<usize>,
    /// Tie-break for the greedy fallback.
    pub tie_break: TieBreak,
}

impl Default for RandomConfig {
    fn default() -> Self {
        Self {
            trials_factor: 1.0,
            seed: 0,
            m_min: None,
            m_max: None,
            tie_break: TieBreak::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScaleStats {
    pub m: usize,
    pub trials: usize,
    pub best_bound: usize,
    pub mean_placements: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BestTrial {
    pub m: usize,
    pub index: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RandomizedResult {
    pub r_best: usize,
    pub schedule: BurningSchedule,
    pub greedy_r: usize,
    /// `None` when the greedy bound was not beaten.
    pub best_trial: Option<BestTrial>,
    pub per_m: Vec<ScaleStats>,
}

pub fn trials_per_scale(trials_factor: f64, m: usize, n: usize) -> usize {
    (trials_factor * m as f64 * ((n + 1) as f64).ln()).ceil().max(1.0) as usize
}

pub fn randomized_approx(g: &Graph, config: &RandomConfig) -> Result<RandomizedResult, RandomError> {
    if g.is_empty() {
        return Err(RandomError::EmptyGraph);
    }
    let c = config.trials_factor;
    if !(c.is_finite() && c > 0.0) {
        return Err(RandomError::InvalidTrialsFactor(c));
    }
    let greedy = greedy_burning(g, config.tie_break).map_err(|_| RandomError::EmptyGraph)?;
    let m_min = config.m_min.unwrap_or(1);
    let m_max = config.m_max.unwrap_or(greedy.r);
    if m_min == 0 {
        return Err(RandomError::InvalidScale(0.0));
    }
    if m_min > m_max {
        return Err(RandomError::EmptySweep { m_min, m_max });
    }
    let n = g.vertex_count();

    let mut per_m = Vec::new();
    // (bound, m, index, outcome, certificate)
    let mut best: Option<(usize, usize, usize, TrialOutcome, DominationCertificate)> = None;
    for m in m_min..=m_max {
        let trials = trials_per_scale(c, m, n);
        let results: Vec<(TrialOutcome, DominationCertificate)> = (0..trials)
            .into_par_iter()
            .map(|index| {
                let trial = random_trial(g, m as f64, trial_seed(config.seed, m, index))
                    .expect("validated inputs");
                let cert = min_domination_bound(&trial.raw_radii()).expect("radii are non-negative");
                (trial, cert)
            })
            .collect();
        let total: usize = results.iter().map(|(t, _)| t.placements.len()).sum();
        let (best_index, (_, best_cert)) = results
            .iter()
            .enumerate()
            .min_by(|(i, a), (j, b)| a.1.r.cmp(&b.1.r).then(i.cmp(j)))
            .expect("at least one trial");
        per_m.push(ScaleStats {
            m,
            trials,
            best_bound: best_cert.r,
            mean_placements: total as f64 / trials as f64,
        });
        if best
            .as_ref()
            .is_none_or(|b| best_cert.r.cmp(&b.0) == Ordering::Less)
        {
            let (trial, cert) = results[best_index].clone();
            best = Some((cert.r, m, best_index, trial, cert));
        }
    }

    let (bound, m, index, trial, cert) = best.expect("sweep is non-empty");
    if bound < greedy.r {
        let schedule = outcome_to_schedule(&trial, &cert)?;
        Ok(RandomizedResult {
            r_best: bound,
            schedule,
            greedy_r: greedy.r,
            best_trial: Some(BestTrial {
                m,
                index,
                seed: trial.seed,
            }),
            per_m,
        })
    } else {
        Ok(RandomizedResult {
            r_best: greedy.r,
            schedule: greedy.schedule,
            greedy_r: greedy.r,
            best_trial: None,
            per_m,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_schedule;

    #[test]
    fn samples_match_trial_draws() {
        // On K_1 a trial places exactly one ball, consuming one draw.
        let trial = random_trial(&Graph::empty(1), 4.0, 11).unwrap();
        assert_eq!(sample_radii(4.0, 1, 11).unwrap(), trial.raw_radii());
        assert_eq!(sample_radii(4.0, 3, 11).unwrap()[0], trial.raw_radii()[0]);
    }

    #[test]
    fn single_vertex_trial() {
        for seed in 0..20 {
            let t = random_trial(&Graph::empty(1), 3.5, seed).unwrap();
            assert_eq!(t.placements.len(), 1);
            let cert = min_domination_bound(&t.raw_radii()).unwrap();
            let s = outcome_to_schedule(&t, &cert).unwrap();
            assert_eq!(s.horizon(), t.placements[0].floored() + 1);
        }
    }

    #[test]
    fn trial_rejects_bad_inputs() {
        assert_eq!(random_trial(&Graph::empty(0), 1.0, 0), Err(RandomError::EmptyGraph));
        assert_eq!(
            random_trial(&Graph::path(3), 0.0, 0),
            Err(RandomError::InvalidScale(0.0))
        );
        assert!(random_trial(&Graph::path(3), f64::NAN, 0).is_err());
    }

    #[test]
    fn domination_bound_examples() {
        assert_eq!(min_domination_bound(&[]).unwrap().r, 0);
        assert_eq!(min_domination_bound(&[0.0]).unwrap().r, 1);
        let cert = min_domination_bound(&[2.3, 0.4, 1.7]).unwrap();
        assert_eq!(cert.r, 3);
        assert_eq!(cert.assignment, vec![2, 0, 1]);
        let cert = min_domination_bound(&[5.0, 5.0]).unwrap();
        assert_eq!(cert.r, 7);
        assert_eq!(cert.assignment, vec![6, 5]);
        assert_eq!(
            min_domination_bound(&[1.0, -0.5]),
            Err(RandomError::InvalidRadius { index: 1, value: -0.5 })
        );
    }

    #[test]
    fn schedule_from_equal_radii() {
        let g = Graph::path(6);
        let trial = TrialOutcome {
            m: 2.0,
            placements: vec![
                Placement { center: 1, raw_radius: 1.2 },
                Placement { center: 4, raw_radius: 1.9 },
            ],
            seed: 0,
        };
        let cert = min_domination_bound(&trial.raw_radii()).unwrap();
        assert_eq!(cert.r, 3);
        let s = outcome_to_schedule(&trial, &cert).unwrap();
        assert_eq!(
            s.balls(),
            &[Ball { center: 1, radius: 2 }, Ball { center: 4, radius: 1 }]
        );
        assert!(validate_schedule(&g, &s).unwrap().is_valid());
    }

    #[test]
    fn mismatched_certificate() {
        let trial = TrialOutcome {
            m: 3.0,
            placements: vec![Placement { center: 0, raw_radius: 2.5 }],
            seed: 0,
        };
        let short = DominationCertificate { r: 1, assignment: vec![] };
        assert!(matches!(
            outcome_to_schedule(&trial, &short),
            Err(RandomError::CertificateMismatch(_))
        ));
        let low = DominationCertificate { r: 2, assignment: vec![1] };
        assert!(matches!(
            outcome_to_schedule(&trial, &low),
            Err(RandomError::CertificateMismatch(_))
        ));
    }

    #[test]
    fn driver_bounds() {
        let res = randomized_approx(&Graph::empty(1), &RandomConfig::default()).unwrap();
        assert_eq!(res.r_best, 1);
        let res = randomized_approx(&Graph::path(9), &RandomConfig { seed: 7, ..Default::default() }).unwrap();
        assert!((3..=res.greedy_r).contains(&res.r_best));
        assert!(validate_schedule(&Graph::path(9), &res.schedule).unwrap().is_valid());
        assert_eq!(
            randomized_approx(
                &Graph::path(9),
                &RandomConfig { m_min: Some(5), m_max: Some(4), ..Default::default() }
            ),
            Err(RandomError::EmptySweep { m_min: 5, m_max: 4 })
        );
    }

    #[test]
    fn trial_count_formula() {
        assert_eq!(trials_per_scale(1.0, 3, 1), 3); // 3 ln 2 = 2.08
        assert_eq!(trials_per_scale(2.0, 10, 99), 93); // 20 ln 100 = 92.1
    }
}
