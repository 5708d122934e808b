//! The `burn` command line: argument parsing, JSON run reports, and the
//! benchmark harness.

pub mod args;
pub mod bench;
pub mod report;
pub mod solvers;

use std::fs;
use std::path::Path;
use std::time::Instant;

use burning::graph::{parse_graph, write_graph};
use burning::instances::{build_gadget, generate, InstanceSpec};
use burning::ptas::{DpOptions, Granularity};
use burning::random::RandomConfig;
use burning::Graph;
use serde_json::json;
use thiserror::Error;

use args::{Cli, Command, GenArgs, GenKind, InputArgs};
use report::{Bounds, InputInfo, RunReport, Status};
use solvers::{Budget, PtasRequest};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

/// What the process prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub exit_code: i32,
}

fn read_input(args: &InputArgs) -> Result<(Graph, InputInfo), CliError> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", args.input.display())))?;
    let g = parse_graph(&text, args.format)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.input.display())))?;
    let info = InputInfo::new(args.input.display().to_string(), &g);
    Ok((g, info))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn emit(report: &RunReport, out: Option<&Path>) -> Result<Execution, CliError> {
    let text = report.to_json();
    let exit_code = match report.status {
        Status::Ok => 0,
        Status::BudgetExceeded | Status::NoCover => 1,
    };
    let stdout = match out {
        Some(path) => {
            write_file(path, &text)?;
            String::new()
        }
        None => text,
    };
    Ok(Execution { stdout, exit_code })
}

pub fn execute(cli: Cli) -> Result<Execution, CliError> {
    match cli.command {
        Command::Exact(args) => {
            let (g, info) = read_input(&args.input)?;
            let budget = Budget::from_secs(args.budget.time_budget, args.budget.node_budget)?;
            let report = if args.domination {
                solvers::exact_domination(&g, info, budget, args.output.timings)?
            } else {
                solvers::exact(&g, info, args.b_max, budget, args.output.timings)?
            };
            emit(&report, args.output.out.as_deref())
        }
        Command::Greedy(args) => {
            let (g, info) = read_input(&args.input)?;
            let report = solvers::greedy(&g, info, args.tie_break, args.output.timings)?;
            emit(&report, args.output.out.as_deref())
        }
        Command::Random(args) => {
            let (g, info) = read_input(&args.input)?;
            let config = RandomConfig {
                trials_factor: args.trials_factor,
                seed: args.seed,
                m_min: args.m_min,
                m_max: args.m_max,
                tie_break: args.tie_break,
            };
            let report = solvers::random(&g, info, &config, args.output.timings)?;
            emit(&report, args.output.out.as_deref())
        }
        Command::Ptas(args) => {
            let (g, info) = read_input(&args.input)?;
            let granularity = match (args.a, args.epsilon) {
                (Some(a), _) => Granularity::Explicit(a),
                (None, Some(eps)) => Granularity::Epsilon(eps),
                (None, None) => Granularity::Epsilon(0.5),
            };
            let req = PtasRequest {
                granularity,
                options: DpOptions {
                    subscript: args.subscript.into(),
                    prune: !args.no_prune,
                    ..DpOptions::default()
                },
                emit_witness: args.emit_witness,
            };
            let report = solvers::ptas(&g, info, req, args.output.timings)?;
            emit(&report, args.output.out.as_deref())
        }
        Command::Gadget(args) => {
            let (g, info) = read_input(&args.input)?;
            let gadget = build_gadget(&g, args.d).map_err(|e| CliError::Input(e.to_string()))?;
            write_file(&args.out, &write_graph(&gadget.gprime, args.out_format))?;
            if let Some(maps) = &args.maps {
                let text = serde_json::to_string_pretty(&gadget.maps()).expect("maps serialize");
                write_file(maps, &(text + "\n"))?;
            }
            let mut report = RunReport::new("gadget", info);
            report.details = json!({
                "d": args.d,
                "gadget_n": gadget.gprime.vertex_count(),
                "gadget_m": gadget.gprime.edge_count(),
                "out": args.out.display().to_string(),
            });
            emit(&report, None)
        }
        Command::Gen(args) => gen(args),
        Command::Bench(args) => {
            let start = Instant::now();
            let cfg = bench::BenchConfig {
                seed: args.seed,
                budget: Budget::from_secs(args.budget.time_budget, args.budget.node_budget)?,
                timings: args.timings,
            };
            let out = bench::run_bench(args.suite, &cfg)?;
            if let Some(path) = &args.out {
                let text = serde_json::to_string_pretty(&out.reports).expect("reports serialize");
                write_file(path, &(text + "\n"))?;
            }
            let csv = out.csv();
            let stdout = match &args.csv {
                Some(path) => {
                    write_file(path, &csv)?;
                    String::new()
                }
                None => csv,
            };
            if args.timings {
                eprintln!("bench finished in {} ms", start.elapsed().as_millis());
            }
            Ok(Execution {
                stdout,
                exit_code: if out.complete() { 0 } else { 1 },
            })
        }
    }
}

fn gen(args: GenArgs) -> Result<Execution, CliError> {
    let spec = match args.kind {
        GenKind::Path { n } => InstanceSpec::Path { n },
        GenKind::Star { leaves } => InstanceSpec::Star { leaves },
        GenKind::Spider { legs, leg_length } => InstanceSpec::Spider { legs, leg_length },
        GenKind::Caterpillar { spine, legs } => InstanceSpec::Caterpillar { spine, legs },
        GenKind::RandomTree { n } => InstanceSpec::RandomTree { n },
        GenKind::RandomForest { n, trees } => InstanceSpec::RandomForest { n, trees },
        GenKind::Grid { rows, cols } => InstanceSpec::Grid { rows, cols },
        GenKind::Gnp { n, p } => InstanceSpec::Gnp { n, p },
    };
    let instance = generate(&spec, args.seed, args.exact_budget).map_err(|e| CliError::Input(e.to_string()))?;
    let text = write_graph(&instance.graph, args.format);
    let mut report = RunReport::new("gen", InputInfo::new(instance.name.clone(), &instance.graph));
    report.seed = Some(args.seed);
    report.result = instance.ground_truth.map(|b| Bounds {
        upper: b,
        lower: Some(b),
        schedule: None,
    });
    report.details = json!({ "kind": spec.kind(), "format": args.format.to_string() });
    match &args.out {
        Some(path) => {
            write_file(path, &text)?;
            emit(&report, None)
        }
        // Without --out the graph itself is the output.
        None => Ok(Execution {
            stdout: text,
            exit_code: 0,
        }),
    }
}
