use std::collections::BTreeMap;
use std::time::Instant;

use burning::graph::validate_schedule;
use burning::{BurningSchedule, Graph};
use serde::Serialize;
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputInfo {
    /// File path or generator name.
    pub source: String,
    pub n: usize,
    pub m: usize,
}

impl InputInfo {
    pub fn new(source: impl Into<String>, g: &Graph) -> Self {
        Self {
            source: source.into(),
            n: g.vertex_count(),
            m: g.edge_count(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    BudgetExceeded,
    /// The diagnostic subscript found no cover within the greedy horizon.
    NoCover,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub upper: usize,
    pub lower: Option<usize>,
    pub schedule: Option<BurningSchedule>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub algorithm: String,
    pub input: InputInfo,
    pub status: Status,
    pub result: Option<Bounds>,
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
    pub counters: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
}

impl RunReport {
    pub fn new(algorithm: &str, input: InputInfo) -> Self {
        Self {
            algorithm: algorithm.to_string(),
            input,
            status: Status::Ok,
            result: None,
            seed: None,
            wall_time_ms: None,
            counters: BTreeMap::new(),
            details: Value::Null,
        }
    }

    /// Records the bounds, refusing a schedule that does not cover `g` within `upper`.
    pub fn bounds(
        mut self,
        g: &Graph,
        upper: usize,
        lower: Option<usize>,
        schedule: Option<BurningSchedule>,
    ) -> Result<Self, CliError> {
        if let Some(lower) = lower {
            if lower > upper {
                return Err(CliError::Internal(format!("lower bound {lower} exceeds upper bound {upper}")));
            }
        }
        if let Some(s) = &schedule {
            let check = validate_schedule(g, s).map_err(|e| CliError::Internal(e.to_string()))?;
            if !check.is_valid() || s.horizon() != upper {
                return Err(CliError::Internal(format!(
                    "{} produced a schedule that does not certify {upper}",
                    self.algorithm
                )));
            }
        }
        self.result = Some(Bounds { upper, lower, schedule });
        Ok(self)
    }

    pub fn counter(mut self, name: &str, value: u64) -> Self {
        self.counters.insert(name.to_string(), value);
        self
    }

    pub fn timed(mut self, start: Instant, timings: bool) -> Self {
        if timings {
            self.wall_time_ms = Some(start.elapsed().as_millis() as u64);
        }
        self
    }

    pub fn upper(&self) -> Option<usize> {
        self.result.as_ref().map(|r| r.upper)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
