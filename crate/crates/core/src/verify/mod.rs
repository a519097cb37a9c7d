//! Named, reproducible verification suites.
//!
//! A suite expands its parameter grid into cases, evaluates them (in
//! parallel; results keep grid order) and reports every computed value.
//! Cases that hit a resource limit are `skip`, never `pass`.

pub mod levels;
pub mod partition;
mod suites;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::config::Limits;
use crate::error::{Error, Result};

pub use levels::{d_table, enumerate_level_subsequences, DTable, LevelSets, LevelSubsequence};
pub use partition::{bijection, partition_circulations, thread_cycle, BijectionReport, CirculationPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub params: Map<String, Value>,
    pub status: CaseStatus,
    pub values: Map<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub runtime_ms: u64,
}

impl SuiteResult {
    pub fn count(&self, status: CaseStatus) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    /// No failing case. Skips do not fail a suite but are never passes.
    pub fn passed(&self) -> bool {
        self.count(CaseStatus::Fail) == 0
    }

    /// One row per case; parameter and value keys become `param.*` and
    /// `value.*` columns (union over cases, sorted).
    pub fn to_csv(&self) -> Result<String> {
        let mut pkeys: Vec<&String> = self.cases.iter().flat_map(|c| c.params.keys()).collect();
        let mut vkeys: Vec<&String> = self.cases.iter().flat_map(|c| c.values.keys()).collect();
        for keys in [&mut pkeys, &mut vkeys] {
            keys.sort();
            keys.dedup();
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["suite".to_string(), "status".to_string()];
        header.extend(pkeys.iter().map(|k| format!("param.{k}")));
        header.extend(vkeys.iter().map(|k| format!("value.{k}")));
        w.write_record(&header).map_err(csv_err)?;
        let cell = |v: Option<&Value>| match v {
            None => String::new(),
            Some(Value::String(s)) => s.clone(),
            Some(other) => other.to_string(),
        };
        for c in &self.cases {
            let mut row = vec![self.suite.clone(), status_name(c.status).to_string()];
            row.extend(pkeys.iter().map(|k| cell(c.params.get(*k))));
            row.extend(vkeys.iter().map(|k| cell(c.values.get(*k))));
            w.write_record(&row).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::precondition(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::precondition(format!("csv: {e}"))
}

fn status_name(s: CaseStatus) -> &'static str {
    match s {
        CaseStatus::Pass => "pass",
        CaseStatus::Fail => "fail",
        CaseStatus::Skip => "skip",
    }
}

/// `key=value` suite parameters, e.g. `k_max=2,n_max=3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams(pub BTreeMap<String, String>);

impl SuiteParams {
    pub fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::precondition(format!("suite parameter {part:?} is not key=value")))?;
            map.insert(k.trim().replace('-', "_"), v.trim().to_string());
        }
        Ok(SuiteParams(map))
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.0.insert(key.replace('-', "_"), value.to_string());
    }

    pub fn usize(&self, key: &str, default: usize) -> Result<usize> {
        match self.0.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| Error::precondition(format!("suite parameter {key}={v} is not a nonnegative integer"))),
        }
    }

    pub fn u64(&self, key: &str, default: u64) -> Result<u64> {
        match self.0.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| Error::precondition(format!("suite parameter {key}={v} is not a nonnegative integer"))),
        }
    }
}

pub const SUITES: &[&str] = &[
    "thm21",
    "artifacts",
    "cor22",
    "thm24",
    "thm25",
    "thm26",
    "cor31",
    "cor32",
    "sec3_facts",
    "remark",
];

/// Runs a named suite. Unknown names are an error; everything that goes
/// wrong inside a case is recorded in that case.
pub fn run_suite(name: &str, params: &SuiteParams, limits: &Limits) -> Result<SuiteResult> {
    let start = Instant::now();
    let cases = match name {
        "thm21" => suites::thm21(params, limits)?,
        "artifacts" => suites::artifacts(params, limits)?,
        "cor22" => suites::cor22(params, limits)?,
        "thm24" => suites::thm24(limits),
        "thm25" => suites::thm25(limits),
        "thm26" => suites::thm26(limits),
        "cor31" => suites::cor31(params, limits)?,
        "cor32" => suites::cor32(params, limits)?,
        "sec3_facts" => suites::sec3_facts(limits),
        "remark" => suites::remark(params, limits)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(SuiteResult {
        suite: name.to_string(),
        cases,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// The explicit map from `R` onto the single cycles through `e*`, for one
/// `(k, n)`, as a one-case suite.
pub fn bijection_check(k: usize, n: usize, limits: &Limits) -> SuiteResult {
    let start = Instant::now();
    let case = suites::bijection_case(k, n, limits);
    SuiteResult {
        suite: "bijection".to_string(),
        cases: vec![case],
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}
