//! Each solver wrapped into a [`RunReport`], shared by the subcommands and the
//! benchmark harness.

use std::time::{Duration, Instant};

use burning::exact::{exact_burning_number_with, exact_domination_number_with, ExactError, SearchLimits};
use burning::greedy::{greedy_burning, TieBreak};
use burning::ptas::{ptas_burning, DpOptions, Granularity, PtasError, Subscript};
use burning::random::{randomized_approx, RandomConfig, RandomError};
use burning::Graph;
use serde_json::json;

use crate::report::{InputInfo, RunReport, Status};
use crate::CliError;

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

impl Budget {
    pub fn from_secs(secs: Option<f64>, nodes: Option<u64>) -> Result<Self, CliError> {
        let time = match secs {
            Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
            Some(s) => return Err(CliError::Input(format!("invalid time budget {s}"))),
            None => None,
        };
        Ok(Self { time, nodes })
    }

    fn limits(&self) -> SearchLimits {
        SearchLimits {
            node_budget: self.nodes,
            deadline: self.time.map(|t| Instant::now() + t),
        }
    }
}

fn ceil_third(r: usize) -> usize {
    r.div_ceil(3)
}

pub fn exact(
    g: &Graph,
    input: InputInfo,
    b_max: Option<usize>,
    budget: Budget,
    timings: bool,
) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let report = RunReport::new("exact", input);
    let greedy = greedy_burning(g, TieBreak::Farthest).map_err(|e| CliError::Input(e.to_string()))?;
    let b_max = b_max.unwrap_or(greedy.r);
    let report = match exact_burning_number_with(g, b_max, budget.limits()) {
        Ok(res) => report
            .bounds(g, res.value, Some(res.value), Some(res.witness))?
            .counter("nodes_explored", res.nodes_explored),
        Err(ExactError::Exceeded { b_max, nodes_explored }) => {
            let mut r = report.counter("nodes_explored", nodes_explored);
            r.status = Status::BudgetExceeded;
            r.details = json!({ "reason": "b_max", "lower_bound": b_max + 1 });
            r
        }
        Err(ExactError::BudgetExhausted { nodes_explored }) => {
            let mut r = report.counter("nodes_explored", nodes_explored);
            r.status = Status::BudgetExceeded;
            r.details = json!({ "reason": "search budget" });
            r
        }
        Err(e) => return Err(CliError::Input(e.to_string())),
    };
    Ok(report.timed(start, timings))
}

pub fn exact_domination(g: &Graph, input: InputInfo, budget: Budget, timings: bool) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut report = RunReport::new("exact-domination", input);
    match exact_domination_number_with(g, budget.limits()) {
        Ok(res) => {
            report.result = Some(crate::report::Bounds {
                upper: res.value,
                lower: Some(res.value),
                schedule: None,
            });
            report.details = json!({ "dominating_set": res.witness });
            report = report.counter("nodes_explored", res.nodes_explored);
        }
        Err(ExactError::BudgetExhausted { nodes_explored }) => {
            report.status = Status::BudgetExceeded;
            report = report.counter("nodes_explored", nodes_explored);
        }
        Err(e) => return Err(CliError::Input(e.to_string())),
    }
    Ok(report.timed(start, timings))
}

pub fn greedy(g: &Graph, input: InputInfo, tie_break: TieBreak, timings: bool) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let res = greedy_burning(g, tie_break).map_err(|e| CliError::Input(e.to_string()))?;
    let mut report = RunReport::new("greedy", input).bounds(g, res.r, Some(ceil_third(res.r)), Some(res.schedule))?;
    report.details = json!({ "tie_break": tie_break.to_string(), "centers": res.centers_in_order });
    Ok(report.timed(start, timings))
}

pub fn random(g: &Graph, input: InputInfo, config: &RandomConfig, timings: bool) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let res = randomized_approx(g, config).map_err(|e| match e {
        RandomError::EmptyGraph
        | RandomError::InvalidScale(_)
        | RandomError::EmptySweep { .. }
        | RandomError::InvalidTrialsFactor(_) => CliError::Input(e.to_string()),
        other => CliError::Internal(other.to_string()),
    })?;
    let trials: usize = res.per_m.iter().map(|s| s.trials).sum();
    let mut report = RunReport::new("random", input)
        .bounds(g, res.r_best, Some(ceil_third(res.greedy_r)), Some(res.schedule))?
        .counter("trials", trials as u64);
    report.seed = Some(config.seed);
    report.details = json!({
        "greedy_r": res.greedy_r,
        "trials_factor": config.trials_factor,
        "best_trial": res.best_trial,
        "per_m": res.per_m,
    });
    Ok(report.timed(start, timings))
}

#[derive(Debug, Clone, Copy)]
pub struct PtasRequest {
    pub granularity: Granularity,
    pub options: DpOptions,
    pub emit_witness: bool,
}

pub fn ptas(g: &Graph, input: InputInfo, req: PtasRequest, timings: bool) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let algorithm = match req.options.subscript {
        Subscript::Reach => "ptas",
        Subscript::Shallow => "ptas-shallow",
    };
    let mut report = RunReport::new(algorithm, input);
    match ptas_burning(g, req.granularity, req.options) {
        Ok(res) => {
            // Only the reach reading certifies `b_star` as a lower bound.
            let lower = (req.options.subscript == Subscript::Reach).then_some(res.b_star);
            report = report
                .bounds(g, res.upper, lower, Some(res.schedule.clone()))?
                .counter("sumsets", res.stats.sumsets)
                .counter("largest_set", res.stats.largest_set as u64);
            if !req.emit_witness {
                if let Some(b) = report.result.as_mut() {
                    b.schedule = None;
                }
            }
            report.details = json!({
                "a": res.a,
                "class_count": res.class_count,
                "greedy_r": res.greedy_r,
                "b_star": res.b_star,
                "interval": [res.b_star, res.upper],
                "cover": res.cover.counts(),
                "prune": req.options.prune,
            });
        }
        Err(PtasError::SetTooLarge { size, max }) => {
            report.status = Status::BudgetExceeded;
            report.details = json!({ "reason": "cover set size", "size": size, "max": max });
        }
        Err(PtasError::NoCover { horizon }) => {
            report.status = Status::NoCover;
            report.details = json!({ "horizon": horizon });
        }
        Err(e) => return Err(CliError::Input(e.to_string())),
    }
    Ok(report.timed(start, timings))
}
