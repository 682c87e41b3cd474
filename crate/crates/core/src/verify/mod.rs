//! Batch runner: executes registered checks over a range of `n` and reports
//! one [`CheckResult`] per `(check, n)`.

mod checks;

pub use checks::{registry, Check};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Grassmann,
    Fano,
    Hodge,
    Diagonal,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Grassmann, Suite::Fano, Suite::Hodge, Suite::Diagonal];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Grassmann => "grassmann",
            Suite::Fano => "fano",
            Suite::Hodge => "hodge",
            Suite::Diagonal => "diagonal",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a comma-separated suite list; `all` expands to every suite.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    let mut out = Vec::new();
    for name in s.split(',').map(str::trim) {
        match name {
            "all" => out.extend(Suite::ALL),
            "" => return Err(Error::usage("empty suite name")),
            _ => out.push(name.parse()?),
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                Error::usage(format!(
                    "unknown suite '{s}' (expected grassmann, fano, hodge, diagonal or all)"
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub n: u32,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::usage(format!(
                "unknown format '{s}' (expected text or json)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    n_min: u32,
    n_max: u32,
    suites: Vec<Suite>,
}

impl RunConfig {
    pub fn new(n_min: u32, n_max: u32, suites: Vec<Suite>) -> Result<Self> {
        if n_min < 1 {
            return Err(Error::usage("n-min must be at least 1"));
        }
        if n_min > n_max {
            return Err(Error::usage(format!(
                "n-min ({n_min}) is larger than n-max ({n_max})"
            )));
        }
        if suites.is_empty() {
            return Err(Error::usage("no suites selected"));
        }
        Ok(RunConfig {
            n_min,
            n_max,
            suites,
        })
    }

    pub fn n_min(&self) -> u32 {
        self.n_min
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn suites(&self) -> &[Suite] {
        &self.suites
    }
}

/// Runs one check at one `n`.
pub fn run_one(check: &Check, n: u32) -> CheckResult {
    let result = |status, computed: String, expected: String, elapsed_ms| CheckResult {
        check_id: check.id.to_string(),
        n,
        status,
        computed,
        expected,
        elapsed_ms,
    };
    if !check.applies(n) {
        return result(
            Status::Skipped,
            String::new(),
            format!("requires {}", check.precondition),
            0,
        );
    }
    let start = Instant::now();
    let outcome = (check.compute)(n);
    let ms = start.elapsed().as_millis() as u64;
    match outcome {
        Ok((computed, expected)) => {
            let status = if computed == expected {
                Status::Pass
            } else {
                Status::Fail
            };
            result(status, computed, expected, ms)
        }
        Err(e) => result(Status::Fail, format!("error: {e}"), String::new(), ms),
    }
}

/// Every registered check of the selected suites for every `n` in range,
/// evaluated in parallel and sorted by `(check_id, n)`.
pub fn run(config: &RunConfig) -> Vec<CheckResult> {
    let checks: Vec<Check> = registry()
        .into_iter()
        .filter(|c| config.suites.contains(&c.suite))
        .collect();
    let jobs: Vec<(&Check, u32)> = checks
        .iter()
        .flat_map(|c| (config.n_min..=config.n_max).map(move |n| (c, n)))
        .collect();
    let mut results: Vec<CheckResult> = jobs.into_par_iter().map(|(c, n)| run_one(c, n)).collect();
    results.sort_by(|a, b| (&a.check_id, a.n).cmp(&(&b.check_id, b.n)));
    results
}

/// Serial variant of [`run`], for comparison.
pub fn run_serial(config: &RunConfig) -> Vec<CheckResult> {
    let mut results = Vec::new();
    for c in registry()
        .iter()
        .filter(|c| config.suites.contains(&c.suite))
    {
        for n in config.n_min..=config.n_max {
            results.push(run_one(c, n));
        }
    }
    results.sort_by(|a, b| (&a.check_id, a.n).cmp(&(&b.check_id, b.n)));
    results
}

pub fn emit(results: &[CheckResult], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(results).expect("check results serialize"),
        Format::Text => emit_text(results),
    }
}

fn emit_text(results: &[CheckResult]) -> String {
    let header = [
        "check_id",
        "n",
        "status",
        "computed",
        "expected",
        "elapsed_ms",
    ];
    let rows: Vec<[String; 6]> = results
        .iter()
        .map(|r| {
            [
                r.check_id.clone(),
                r.n.to_string(),
                r.status.as_str().to_string(),
                r.computed.clone(),
                r.expected.clone(),
                r.elapsed_ms.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[&str]| {
        let mut s = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(&header);
    for row in &rows {
        out.push_str(&line(&row.each_ref().map(String::as_str)));
    }
    let count = |s| results.iter().filter(|r| r.status == s).count();
    out.push_str(&format!(
        "{} passed, {} failed, {} skipped\n",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    ));
    out
}

/// 0 when nothing failed, 1 otherwise. Skipped checks do not fail a run.
pub fn exit_code(results: &[CheckResult]) -> i32 {
    i32::from(results.iter().any(|r| r.status == Status::Fail))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(status: Status) -> CheckResult {
        CheckResult {
            check_id: "x.y".into(),
            n: 2,
            status,
            computed: "1".into(),
            expected: "1".into(),
            elapsed_ms: 0,
        }
    }

    #[test]
    fn suites_parse() {
        assert_eq!(parse_suites("all").unwrap(), Suite::ALL.to_vec());
        assert_eq!(
            parse_suites("hodge,fano,hodge").unwrap(),
            vec![Suite::Fano, Suite::Hodge]
        );
        assert!(parse_suites("fano,lines").is_err());
        assert!(parse_suites("").is_err());
    }

    #[test]
    fn config_validation() {
        assert!(RunConfig::new(3, 2, vec![Suite::Fano]).is_err());
        assert!(RunConfig::new(0, 2, vec![Suite::Fano]).is_err());
        assert!(RunConfig::new(1, 1, vec![]).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&[]), 0);
        assert_eq!(emit(&[], Format::Json), "[]");
        assert_eq!(
            exit_code(&[sample(Status::Pass), sample(Status::Skipped)]),
            0
        );
        assert_eq!(exit_code(&[sample(Status::Pass), sample(Status::Fail)]), 1);
    }

    #[test]
    fn json_round_trip() {
        let rs = vec![sample(Status::Pass), sample(Status::Skipped)];
        let back: Vec<CheckResult> = serde_json::from_str(&emit(&rs, Format::Json)).unwrap();
        assert_eq!(back, rs);
    }

    #[test]
    fn registry_ids_unique() {
        let mut ids: Vec<_> = registry().iter().map(|c| c.id).collect();
        let len = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), len);
    }
}
