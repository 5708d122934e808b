//! Benchmark suites. Instances run in parallel; rows and reports come back
//! sorted by instance name.

use std::time::Instant;

use burning::exact::is_dominating;
use burning::greedy::TieBreak;
use burning::instances::{build_gadget, extract_dominating_set, generate, GeneratedInstance, InstanceSpec};
use burning::ptas::{DpOptions, Granularity, Subscript};
use burning::random::{min_domination_bound, random_trial, sample_radii, trial_seed, RandomConfig};
use burning::{BurningSchedule, Graph};
use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::report::{InputInfo, RunReport, Status};
use crate::solvers::{self, Budget, PtasRequest};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    SmallTrees,
    Paths,
    Gadgets,
    RandomStats,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BenchConfig {
    pub seed: u64,
    pub budget: Budget,
    pub timings: bool,
}

/// One CSV line. Columns a suite does not measure stay blank.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub b_exact: Option<usize>,
    pub r_greedy: Option<usize>,
    pub r_random: Option<usize>,
    pub b_star: Option<usize>,
    pub b_star_a2: Option<usize>,
    pub b_star_a3: Option<usize>,
    pub b_star_shallow: Option<usize>,
    pub d: Option<usize>,
    pub gamma: Option<usize>,
    pub extracted: Option<usize>,
    pub ratio_greedy: Option<f64>,
    pub ratio_random: Option<f64>,
    pub metric: Option<String>,
    pub value: Option<f64>,
    pub threshold: Option<f64>,
    pub ok: bool,
    pub complete: bool,
    pub time_ms: Option<u64>,
}

impl BenchRow {
    fn new(instance: impl Into<String>, g: &Graph) -> Self {
        Self {
            instance: instance.into(),
            n: g.vertex_count(),
            m: g.edge_count(),
            complete: true,
            ..Self::default()
        }
    }

    fn ratios(&mut self) {
        if let Some(b) = self.b_exact {
            self.ratio_greedy = self.r_greedy.map(|r| r as f64 / b as f64);
            self.ratio_random = self.r_random.map(|r| r as f64 / b as f64);
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchOutput {
    pub rows: Vec<BenchRow>,
    pub reports: Vec<RunReport>,
}

impl BenchOutput {
    pub fn complete(&self) -> bool {
        self.rows.iter().all(|r| r.complete)
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).expect("rows serialize");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is UTF-8")
    }
}

type Job<'a> = Box<dyn Fn() -> Result<(BenchRow, Vec<RunReport>), CliError> + Send + Sync + 'a>;

fn run_jobs(jobs: Vec<Job<'_>>, timings: bool) -> Result<BenchOutput, CliError> {
    let mut results = jobs
        .par_iter()
        .map(|job| {
            let start = Instant::now();
            let (mut row, reports) = job()?;
            if timings {
                row.time_ms = Some(start.elapsed().as_millis() as u64);
            }
            Ok((row, reports))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    results.sort_by(|a, b| a.0.instance.cmp(&b.0.instance));
    let (rows, reports): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    Ok(BenchOutput {
        rows,
        reports: reports.into_iter().flatten().collect(),
    })
}

pub fn run_bench(suite: Suite, cfg: &BenchConfig) -> Result<BenchOutput, CliError> {
    let jobs: Vec<Job<'_>> = match suite {
        Suite::Paths => (1..=17)
            .map(|n| -> Job<'_> { Box::new(move || solve_all(&format!("path-n{n:02}"), &Graph::path(n), cfg, false)) })
            .collect(),
        Suite::SmallTrees => small_tree_corpus(cfg.seed)
            .into_iter()
            .map(|inst| -> Job<'_> { Box::new(move || solve_all(&inst.name, &inst.graph, cfg, true)) })
            .collect(),
        Suite::Gadgets => connected_graphs_up_to_four()
            .into_iter()
            .flat_map(|(name, g)| [1, 2].map(|d| (name, g.clone(), d)))
            .map(|(name, g, d)| -> Job<'_> { Box::new(move || gadget_row(name, &g, d, cfg)) })
            .collect(),
        Suite::RandomStats => {
            let mut jobs: Vec<Job<'_>> = vec![Box::new(move || Ok((placements_row(cfg.seed), Vec::new())))];
            for m in [100, 400] {
                jobs.push(Box::new(move || Ok((domination_tail_row(m, cfg.seed), Vec::new()))));
            }
            for n in [100, 225, 400] {
                for k in 0..DRIVER_SEEDS {
                    jobs.push(Box::new(move || driver_row(n, cfg.seed.wrapping_add(k), cfg)));
                }
            }
            jobs
        }
    };
    run_jobs(jobs, cfg.timings)
}

/// Random trees and forests with `1 <= n <= 14`, 240 in all.
pub fn small_tree_corpus(seed: u64) -> Vec<GeneratedInstance> {
    (0..240u64)
        .map(|i| {
            let n = 1 + (i % 14) as usize;
            let spec = if i % 2 == 0 {
                InstanceSpec::RandomTree { n }
            } else {
                InstanceSpec::RandomForest {
                    n,
                    trees: 1 + (i as usize / 2) % 3.min(n),
                }
            };
            generate(&spec, seed.wrapping_mul(1_000).wrapping_add(i), 0).expect("valid corpus parameters")
        })
        .collect()
}

/// Structured families plus random trees, forests and `G(n, p)` graphs, all
/// with at most 16 vertices. Ground truth is annotated within `exact_budget`
/// search nodes per instance.
pub fn mixed_corpus(seed: u64, exact_budget: u64) -> Vec<GeneratedInstance> {
    let mut specs = Vec::new();
    for n in 1..=16 {
        specs.push((InstanceSpec::Path { n }, 0));
    }
    for leaves in 1..=15 {
        specs.push((InstanceSpec::Star { leaves }, 0));
    }
    for legs in 2..=5 {
        for leg_length in 1..=3 {
            specs.push((InstanceSpec::Spider { legs, leg_length }, 0));
        }
    }
    for spine in 1..=8 {
        for legs in 0..=2 {
            if spine * (1 + legs) <= 16 {
                specs.push((InstanceSpec::Caterpillar { spine, legs }, 0));
            }
        }
    }
    for rows in 1..=4 {
        for cols in rows..=4 {
            specs.push((InstanceSpec::Grid { rows, cols }, 0));
        }
    }
    let mut k = 0u64;
    let mut next_seed = || {
        k += 1;
        seed.wrapping_mul(1_000_003).wrapping_add(k)
    };
    for n in 2..=16 {
        for _ in 0..6 {
            specs.push((InstanceSpec::RandomTree { n }, next_seed()));
        }
    }
    for n in 4..=16 {
        for trees in 2..=3 {
            for _ in 0..2 {
                specs.push((InstanceSpec::RandomForest { n, trees }, next_seed()));
            }
        }
    }
    for n in 5..=16 {
        for p in [0.15, 0.3, 0.5] {
            for _ in 0..3 {
                specs.push((InstanceSpec::Gnp { n, p }, next_seed()));
            }
        }
    }
    specs
        .into_par_iter()
        .map(|(spec, s)| generate(&spec, s, exact_budget).expect("valid corpus parameters"))
        .collect()
}

/// One representative of every isomorphism class of connected graphs on at
/// most four vertices.
pub fn connected_graphs_up_to_four() -> Vec<(&'static str, Graph)> {
    let g = |n, edges: &[(usize, usize)]| Graph::from_edges(n, edges.iter().copied()).expect("valid edges");
    vec![
        ("k1", Graph::empty(1)),
        ("k2", Graph::path(2)),
        ("p3", Graph::path(3)),
        ("k3", Graph::complete(3)),
        ("p4", Graph::path(4)),
        ("star3", g(4, &[(0, 1), (0, 2), (0, 3)])),
        ("c4", Graph::cycle(4)),
        ("paw", g(4, &[(0, 1), (1, 2), (2, 0), (2, 3)])),
        ("diamond", g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])),
        ("k4", Graph::complete(4)),
    ]
}

fn upper(report: &RunReport) -> Option<usize> {
    (report.status == Status::Ok).then(|| report.upper()).flatten()
}

fn details_usize(report: &RunReport, key: &str) -> Option<usize> {
    report.details.get(key)?.as_u64().map(|x| x as usize)
}

/// Exact, greedy, random and PTAS on one instance. `coarse` adds the PTAS at
/// `a = 2, 3` and the shallow-subscript diagnostic.
fn solve_all(
    name: &str,
    g: &Graph,
    cfg: &BenchConfig,
    coarse: bool,
) -> Result<(BenchRow, Vec<RunReport>), CliError> {
    let info = || InputInfo::new(name, g);
    let mut row = BenchRow::new(name, g);
    let mut reports = Vec::new();

    let exact = solvers::exact(g, info(), None, cfg.budget, cfg.timings)?;
    row.b_exact = upper(&exact);
    row.complete = row.b_exact.is_some();
    reports.push(exact);

    let greedy = solvers::greedy(g, info(), TieBreak::Farthest, cfg.timings)?;
    row.r_greedy = upper(&greedy);
    reports.push(greedy);

    let random_cfg = RandomConfig {
        seed: cfg.seed,
        ..RandomConfig::default()
    };
    let random = solvers::random(g, info(), &random_cfg, cfg.timings)?;
    row.r_random = upper(&random);
    reports.push(random);

    let mut ptas = |a: usize, subscript: Subscript| -> Result<Option<usize>, CliError> {
        let req = PtasRequest {
            granularity: Granularity::Explicit(a),
            options: DpOptions {
                subscript,
                ..DpOptions::default()
            },
            emit_witness: true,
        };
        let report = solvers::ptas(g, info(), req, cfg.timings)?;
        let b_star = details_usize(&report, "b_star");
        reports.push(report);
        Ok(b_star)
    };
    row.b_star = ptas(1, Subscript::Reach)?;
    if coarse {
        row.b_star_a2 = ptas(2, Subscript::Reach)?;
        row.b_star_a3 = ptas(3, Subscript::Reach)?;
        row.b_star_shallow = ptas(1, Subscript::Shallow)?;
    }

    row.ok = match (row.b_exact, row.r_greedy, row.r_random, row.b_star) {
        (Some(b), Some(rg), Some(rr), Some(bs)) => {
            let sandwich = |bs: Option<usize>, a: usize| bs.is_none_or(|s| s <= b && b < s + a);
            let closed_form = coarse || Some(b) == isqrt_ceil(row.n);
            bs == b && b <= rg && rg <= 3 * b && b <= rr && rr <= rg
                && sandwich(row.b_star_a2, 2)
                && sandwich(row.b_star_a3, 3)
                && closed_form
        }
        _ => false,
    };
    row.ratios();
    Ok((row, reports))
}

fn isqrt_ceil(n: usize) -> Option<usize> {
    let r = n.isqrt();
    Some(if r * r < n { r + 1 } else { r })
}

fn gadget_row(
    name: &str,
    g: &Graph,
    d: usize,
    cfg: &BenchConfig,
) -> Result<(BenchRow, Vec<RunReport>), CliError> {
    let instance = format!("gadget-{name}-d{d}");
    let gadget = build_gadget(g, d).map_err(|e| CliError::Internal(e.to_string()))?;
    let gp = &gadget.gprime;
    let mut row = BenchRow::new(&instance, gp);
    row.d = Some(d);

    let dom = solvers::exact_domination(g, InputInfo::new(name, g), cfg.budget, cfg.timings)?;
    row.gamma = upper(&dom);
    let exact = solvers::exact(gp, InputInfo::new(&instance, gp), None, cfg.budget, cfg.timings)?;
    row.b_exact = upper(&exact);
    row.complete = row.gamma.is_some() && row.b_exact.is_some();

    if let (Some(gamma), Some(b)) = (row.gamma, row.b_exact) {
        let witness: &BurningSchedule = exact
            .result
            .as_ref()
            .and_then(|r| r.schedule.as_ref())
            .ok_or_else(|| CliError::Internal("exact search returned no witness".into()))?;
        let forward = b <= gamma + 3 * d;
        // The extraction argument needs a horizon below 5d.
        let reverse = if b < 5 * d {
            let set = extract_dominating_set(&gadget, witness);
            row.extracted = Some(set.len());
            is_dominating(g, &set) && set.len() <= 2 * b
        } else {
            true
        };
        row.ok = forward && reverse;
    }
    Ok((row, vec![dom, exact]))
}

const PLACEMENT_SAMPLES: usize = 2000;
const TAIL_SAMPLES: usize = 2000;
const DRIVER_SEEDS: u64 = 5;

/// Mean number of balls a trial places on `P_25` at scale 12.
pub fn placements_row(seed: u64) -> BenchRow {
    let g = Graph::path(25);
    let m = 12;
    let counts: Vec<f64> = (0..PLACEMENT_SAMPLES)
        .into_par_iter()
        .map(|i| {
            let trial = random_trial(&g, m as f64, trial_seed(seed, m, i)).expect("valid scale");
            trial.placements.len() as f64
        })
        .collect();
    let (mean, se) = mean_and_standard_error(&counts);
    let mut row = BenchRow::new("placements-p25-m12", &g);
    row.b_exact = Some(5);
    row.metric = Some("mean_placements".into());
    row.value = Some(mean);
    row.threshold = Some(m as f64 + 2.0 * se);
    row.ok = mean <= m as f64 + 2.0 * se;
    row
}

/// 99th percentile of the domination bound of `m` uniform draws on `[0, m]`.
pub fn domination_tail_row(m: usize, seed: u64) -> BenchRow {
    let mut bounds: Vec<usize> = (0..TAIL_SAMPLES)
        .into_par_iter()
        .map(|i| {
            let radii = sample_radii(m as f64, m, trial_seed(seed, m, i)).expect("valid scale");
            min_domination_bound(&radii).expect("finite radii").r
        })
        .collect();
    bounds.sort_unstable();
    let p99 = bounds[(TAIL_SAMPLES * 99).div_ceil(100) - 1];
    let mf = m as f64;
    let threshold = mf + 4.0 * (mf * mf.ln()).sqrt();
    BenchRow {
        instance: format!("domination-tail-m{m}"),
        metric: Some("p99_domination_bound".into()),
        value: Some(p99 as f64),
        threshold: Some(threshold),
        ok: p99 as f64 <= threshold,
        complete: true,
        ..BenchRow::default()
    }
}

fn driver_row(n: usize, seed: u64, cfg: &BenchConfig) -> Result<(BenchRow, Vec<RunReport>), CliError> {
    let g = Graph::path(n);
    let instance = format!("driver-path-n{n}-s{seed}");
    let random_cfg = RandomConfig {
        seed,
        ..RandomConfig::default()
    };
    let report = solvers::random(&g, InputInfo::new(&instance, &g), &random_cfg, cfg.timings)?;
    let mut row = BenchRow::new(&instance, &g);
    row.b_exact = isqrt_ceil(n);
    row.r_random = report.upper();
    row.r_greedy = details_usize(&report, "greedy_r");
    row.metric = Some("ratio_to_sqrt".into());
    row.value = row.r_random.zip(row.b_exact).map(|(r, b)| r as f64 / b as f64);
    row.threshold = Some(2.5);
    row.ok = matches!((row.r_random, row.r_greedy), (Some(r), Some(g)) if r <= g);
    row.ratios();
    Ok((row, vec![report]))
}

pub fn mean_and_standard_error(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}
