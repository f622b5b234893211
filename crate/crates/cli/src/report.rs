use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// Command-line parameters; `None` means the suite default.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub g: Option<usize>,
    pub m: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub extended_sp_generators: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// The claim being checked, quoted, or "plumbing".
    pub anchor: String,
    pub status: Status,
    pub values: Value,
    pub wall_time_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub params: Value,
    pub status: Status,
    pub checks: Vec<CheckRecord>,
    pub wall_time_ms: f64,
}

impl SuiteReport {
    pub fn new(suite: &str, params: Value) -> Self {
        SuiteReport {
            schema_version: REPORT_SCHEMA_VERSION,
            suite: suite.to_string(),
            params,
            status: Status::Pass,
            checks: Vec::new(),
            wall_time_ms: 0.0,
        }
    }

    /// Runs `f`, timing it, and appends its record.
    pub fn check<E>(
        &mut self,
        name: impl Into<String>,
        anchor: &str,
        f: impl FnOnce() -> Result<(Status, Value), E>,
    ) -> Result<Status, E> {
        let start = Instant::now();
        let (status, values) = f()?;
        let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        self.checks.push(CheckRecord {
            name: name.into(),
            anchor: anchor.to_string(),
            status,
            values,
            wall_time_ms,
        });
        self.status = overall(self.checks.iter().map(|c| c.status));
        Ok(status)
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn get(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The report with every timing field zeroed, for reproducibility checks.
    pub fn without_timings(&self) -> SuiteReport {
        let mut r = self.clone();
        r.wall_time_ms = 0.0;
        r.checks.iter_mut().for_each(|c| c.wall_time_ms = 0.0);
        r
    }
}

fn overall(statuses: impl Iterator<Item = Status>) -> Status {
    let mut out = Status::Pass;
    for s in statuses {
        match s {
            Status::Fail => return Status::Fail,
            Status::Inconclusive => out = Status::Inconclusive,
            Status::Pass => {}
        }
    }
    out
}
