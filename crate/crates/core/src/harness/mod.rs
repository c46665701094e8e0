//! Fixture files, the check catalog and check reports.

mod checks;
pub mod fixture;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::group::BuildOptions;
use crate::identities::WORD_EVALUATION_BUDGET;

pub use fixture::{
    build_fixture, parse_fixture, serialize_fixture, ActionFixture, BuiltFixture, FixtureFile,
};

/// Every selectable check. `all` selects the rest.
pub const CATALOG: &[&str] = &[
    "axioms",
    "np_series",
    "lazard",
    "jacobi",
    "higman",
    "prop_2_11",
    "cor_2_14",
    "collection",
    "lemma_3_3",
    "lemma_3_4",
    "c4_1",
    "c4_2",
    "c4_6",
    "c4_12",
    "t4_3",
    "t4_4",
    "pm_split",
    "obs_4_8",
    "fitting",
    "powerful",
    "iso",
    "lie_identity",
    "word_law",
    "all",
];

const GROUP_CHECKS: &[&str] = &[
    "axioms",
    "np_series",
    "lazard",
    "jacobi",
    "higman",
    "prop_2_11",
    "cor_2_14",
    "collection",
    "lemma_3_3",
    "lemma_3_4",
    "fitting",
    "powerful",
];

const ACTION_CHECKS: &[&str] = &["c4_1", "c4_2", "c4_6", "c4_12", "t4_3", "t4_4", "pm_split", "obs_4_8"];

const ISO_CHECKS: &[&str] = &["iso"];

/// Only run from explicit `check` lines, since they need a parameter.
const EXPLICIT_CHECKS: &[&str] = &["lie_identity", "word_law"];

/// Fixture files shipped with the crate, in merge order.
pub const BUNDLED: &[(&str, &str)] = &[
    ("dihedral8.fix", include_str!("../../fixtures/dihedral8.fix")),
    ("quaternion8.fix", include_str!("../../fixtures/quaternion8.fix")),
    ("corpus.fix", include_str!("../../fixtures/corpus.fix")),
];

/// All bundled files merged into one fixture.
pub fn bundled_corpus() -> Result<FixtureFile> {
    let mut all = FixtureFile::default();
    for (_, text) in BUNDLED {
        all.merge(parse_fixture(text)?)?;
    }
    Ok(all)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    SampledPass,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::SampledPass => "sampled-pass",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    /// Group, action or isomorphism name.
    pub group: String,
    pub check: String,
    pub status: Status,
    pub details: Value,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub tool_version: String,
    pub seed: u64,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub seed: u64,
    /// Evaluation budget for group-word laws.
    pub budget: u64,
    /// Record wall-clock times. Reports are only reproducible without them.
    pub timings: bool,
    pub build: BuildOptions,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { seed: 0, budget: WORD_EVALUATION_BUDGET, timings: false, build: BuildOptions::default() }
    }
}

/// Splits a comma-separated selection and expands `all`.
pub fn parse_selection(text: &str) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for name in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if !CATALOG.contains(&name) {
            return Err(Error::UnknownCheck { name: name.into(), catalog: CATALOG.join(", ") });
        }
        let names: Vec<&str> = if name == "all" { CATALOG[..CATALOG.len() - 1].to_vec() } else { vec![name] };
        for n in names {
            if !out.iter().any(|o| o == n) {
                out.push(n.to_string());
            }
        }
    }
    if out.is_empty() {
        return Err(Error::UnknownCheck { name: text.into(), catalog: CATALOG.join(", ") });
    }
    Ok(out)
}

struct Task {
    target: String,
    check: String,
    params: Vec<(String, String)>,
    build_error: Option<String>,
}

impl Task {
    fn key(&self) -> (String, String, String) {
        (self.target.clone(), self.check.clone(), params_text(&self.params))
    }
}

fn params_text(params: &[(String, String)]) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn plan(built: &BuiltFixture, selection: &[String]) -> Vec<Task> {
    let file = &built.file;
    let selected = |c: &str| selection.iter().any(|s| s == c);
    let failed = |group: &str| match built.groups.get(group) {
        Some(Err(e)) => Some(format!("group `{group}` failed to build: {e}")),
        _ => None,
    };
    let mut targets: Vec<(&str, &[&str], &str)> = Vec::new();
    for g in &file.groups {
        targets.push((&g.name, GROUP_CHECKS, &g.name));
    }
    for a in &file.actions {
        targets.push((&a.name, ACTION_CHECKS, &a.group));
    }
    for i in &file.isos {
        targets.push((&i.name, ISO_CHECKS, &i.source));
    }
    let mut tasks = Vec::new();
    for (target, checks, group) in targets {
        let mut errs = vec![failed(group)];
        if let Some(i) = file.isos.iter().find(|i| i.name == target) {
            errs.push(failed(&i.target));
        }
        let build_error = errs.into_iter().flatten().next();
        for &check in checks.iter().chain(EXPLICIT_CHECKS) {
            if !selected(check) {
                continue;
            }
            let explicit: Vec<_> = file.checks.iter().filter(|c| c.target == target && c.check == check).collect();
            if explicit.is_empty() && EXPLICIT_CHECKS.contains(&check) {
                continue;
            }
            let params: Vec<Vec<(String, String)>> = if explicit.is_empty() {
                vec![Vec::new()]
            } else {
                explicit.iter().map(|c| c.params.clone()).collect()
            };
            for params in params {
                tasks.push(Task { target: target.to_string(), check: check.to_string(), params, build_error: build_error.clone() });
            }
        }
    }
    tasks.sort_by_key(Task::key);
    tasks
}

/// Runs the selected checks on every applicable entry of a built fixture.
pub fn run_checks(built: &BuiltFixture, selection: &[String], opts: &RunOptions) -> Result<CheckReport> {
    for s in selection {
        if !CATALOG.contains(&s.as_str()) {
            return Err(Error::UnknownCheck { name: s.clone(), catalog: CATALOG.join(", ") });
        }
    }
    let selection: Vec<String> = if selection.iter().any(|s| s == "all") {
        parse_selection("all")?
    } else {
        selection.to_vec()
    };
    let tasks = plan(built, &selection);
    let ctx = checks::Ctx::new(built, opts);
    let rows = tasks
        .par_iter()
        .map(|t| {
            let start = Instant::now();
            let outcome = match &t.build_error {
                Some(e) => Err(Error::MalformedSpec(e.clone())),
                None => checks::run(&ctx, &t.check, &t.target, &checks::Params(&t.params)),
            };
            let (status, mut details) = match outcome {
                Ok(o) => (o.status, o.details),
                Err(e) if checks::is_skip(&e) => {
                    let mut m = serde_json::Map::new();
                    m.insert("reason".into(), Value::String(e.to_string()));
                    (Status::Skipped, m)
                }
                Err(e) => {
                    let mut m = serde_json::Map::new();
                    m.insert("witness".into(), Value::String(e.to_string()));
                    (Status::Fail, m)
                }
            };
            if !t.params.is_empty() {
                details.insert("params".into(), Value::String(params_text(&t.params)));
            }
            Row {
                group: t.target.clone(),
                check: t.check.clone(),
                status,
                details: Value::Object(details),
                elapsed_ms: opts.timings.then(|| start.elapsed().as_secs_f64() * 1e3),
            }
        })
        .collect();
    Ok(CheckReport { tool_version: env!("CARGO_PKG_VERSION").to_string(), seed: opts.seed, rows })
}

/// Parses, builds and checks in one step.
pub fn run_fixture(file: &FixtureFile, selection: &[String], opts: &RunOptions) -> Result<CheckReport> {
    let built = build_fixture(file, &opts.build);
    run_checks(&built, selection, opts)
}

/// One solvable group: its exponent next to its Fitting height.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FittingRecord {
    pub group: String,
    pub order: u64,
    pub exponent: u64,
    pub height: u64,
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn row(&self, group: &str, check: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.group == group && r.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedSpec(e.to_string()))
    }

    /// Exponent against Fitting height, from the passing `fitting` rows.
    pub fn fitting_table(&self) -> Vec<FittingRecord> {
        let mut out: Vec<FittingRecord> = self
            .rows
            .iter()
            .filter(|r| r.check == "fitting" && r.status == Status::Pass)
            .filter_map(|r| {
                let d = &r.details;
                Some(FittingRecord {
                    group: r.group.clone(),
                    order: d["order"].as_u64()?,
                    exponent: d["exponent"].as_u64()?,
                    height: d["height"].as_u64()?,
                })
            })
            .collect();
        out.sort_by(|a, b| (a.exponent, a.height, &a.group).cmp(&(b.exponent, b.height, &b.group)));
        out
    }

    /// Aligned plain-text table, one line per row plus a summary line.
    pub fn to_table(&self) -> String {
        let headers = ["group", "check", "status", "details"];
        let cells: Vec<[String; 4]> = self
            .rows
            .iter()
            .map(|r| {
                let mut d = r.details.to_string();
                if d.len() > 96 {
                    let cut = (0..=93).rev().find(|&i| d.is_char_boundary(i)).unwrap_or(0);
                    d.truncate(cut);
                    d.push_str("...");
                }
                [r.group.clone(), r.check.clone(), r.status.as_str().to_string(), d]
            })
            .collect();
        let mut w = headers.map(str::len);
        for c in &cells {
            for k in 0..3 {
                w[k] = w[k].max(c[k].len());
            }
        }
        let mut s = String::new();
        let line = |s: &mut String, c: [&str; 4]| {
            let _ = writeln!(s, "{:<w0$}  {:<w1$}  {:<w2$}  {}", c[0], c[1], c[2], c[3], w0 = w[0], w1 = w[1], w2 = w[2]);
        };
        line(&mut s, headers);
        for c in &cells {
            line(&mut s, [&c[0], &c[1], &c[2], &c[3]]);
        }
        let _ = writeln!(
            s,
            "\n{} rows: {} pass, {} sampled-pass, {} skipped, {} fail",
            self.rows.len(),
            self.count(Status::Pass),
            self.count(Status::SampledPass),
            self.count(Status::Skipped),
            self.count(Status::Fail)
        );
        s
    }

    pub fn fitting_table_text(&self) -> String {
        let mut s = String::from("exponent  fitting height  order  group\n");
        for r in self.fitting_table() {
            let _ = writeln!(s, "{:>8}  {:>14}  {:>5}  {}", r.exponent, r.height, r.order, r.group);
        }
        s
    }
}
