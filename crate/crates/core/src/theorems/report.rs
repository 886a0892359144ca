//! Running checks over a corpus and the versioned report.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::families::FamilySpec;

use super::{reverify, Certificate, Check, CheckConfig, CheckError, Subject, Verdict};

pub const REPORT_SCHEMA: &str = "extraconn.report/1";

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunOptions {
    pub config: CheckConfig,
    /// Seconds of engine time allowed per graph; unlimited when `None`.
    pub budget_secs: Option<f64>,
    /// Include per-graph wall times (makes output nondeterministic).
    pub timings: bool,
}

impl RunOptions {
    fn budget(&self) -> Budget {
        self.budget_secs.map_or_else(Budget::unlimited, Budget::seconds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum CellOutcome {
    Pass,
    VacuousPass,
    Fail { certificate: Box<Certificate> },
    BudgetExceeded,
    Error { message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub id: String,
    #[serde(flatten)]
    pub outcome: CellOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub graph: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    /// Set when the graph could not be generated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub checks: Vec<CellReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

/// Something noteworthy that is not a failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub graph: String,
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub generation_failed: usize,
    pub cells: usize,
    pub pass: usize,
    pub vacuous_pass: usize,
    pub fail: usize,
    pub budget_exceeded: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub schema: String,
    pub options: RunOptions,
    pub checks: Vec<String>,
    pub graphs: Vec<GraphReport>,
    pub summary: Summary,
    pub findings: Vec<Finding>,
}

impl CorpusReport {
    pub fn failures(&self) -> impl Iterator<Item = &Certificate> {
        self.graphs.iter().flat_map(|g| &g.checks).filter_map(|c| match &c.outcome {
            CellOutcome::Fail { certificate } => Some(certificate.as_ref()),
            _ => None,
        })
    }

    /// Verdict of one cell, if present.
    pub fn outcome(&self, graph: &str, id: &str) -> Option<&CellOutcome> {
        self.graphs
            .iter()
            .find(|g| g.graph == graph)?
            .checks
            .iter()
            .find(|c| c.id == id)
            .map(|c| &c.outcome)
    }
}

fn evaluate_cell(s: &Subject, check: &Check, opts: &RunOptions) -> CellOutcome {
    match check.evaluate(s, &opts.config) {
        Ok(Verdict::Pass) => CellOutcome::Pass,
        Ok(Verdict::VacuousPass) => CellOutcome::VacuousPass,
        Ok(Verdict::Fail(certificate)) => match reverify(&certificate, &opts.config, opts.budget()) {
            Ok(true) => CellOutcome::Fail { certificate },
            Ok(false) => CellOutcome::Error {
                message: format!("failure did not reproduce: {}", certificate.detail),
            },
            Err(CheckError::Budget(_)) => CellOutcome::BudgetExceeded,
            Err(e) => CellOutcome::Error {
                message: format!("re-verification failed: {e}"),
            },
        },
        Err(CheckError::Budget(_)) => CellOutcome::BudgetExceeded,
        Err(e) => CellOutcome::Error { message: e.to_string() },
    }
}

fn run_one(spec: &FamilySpec, checks: &[Check], opts: &RunOptions) -> (GraphReport, Vec<Finding>) {
    let start = Instant::now();
    let name = spec.to_string();
    let millis = |t: Instant| opts.timings.then(|| t.elapsed().as_millis() as u64);
    let s = match Subject::from_spec(spec, opts.budget()) {
        Ok(s) => s,
        Err(e) => {
            let report = GraphReport {
                graph: name,
                order: None,
                size: None,
                error: Some(e.to_string()),
                checks: vec![],
                millis: millis(start),
            };
            return (report, vec![]);
        }
    };
    let cells = checks
        .iter()
        .map(|c| CellReport {
            id: c.id.to_string(),
            outcome: evaluate_cell(&s, c, opts),
        })
        .collect();
    let findings = s
        .take_notes()
        .into_iter()
        .map(|note| Finding {
            graph: name.clone(),
            note,
        })
        .collect();
    let report = GraphReport {
        order: Some(s.order()),
        size: Some(s.graph.size()),
        graph: name,
        error: None,
        checks: cells,
        millis: millis(start),
    };
    (report, findings)
}

/// Evaluates every check on every graph. Graphs run in parallel; the report
/// keeps corpus order and check order.
pub fn run_corpus(corpus: &[FamilySpec], checks: &[Check], opts: &RunOptions) -> CorpusReport {
    let rows: Vec<(GraphReport, Vec<Finding>)> = corpus.par_iter().map(|spec| run_one(spec, checks, opts)).collect();
    let mut summary = Summary {
        graphs: rows.len(),
        ..Summary::default()
    };
    let mut graphs = Vec::with_capacity(rows.len());
    let mut findings = Vec::new();
    for (g, f) in rows {
        if g.error.is_some() {
            summary.generation_failed += 1;
        }
        for c in &g.checks {
            summary.cells += 1;
            match c.outcome {
                CellOutcome::Pass => summary.pass += 1,
                CellOutcome::VacuousPass => summary.vacuous_pass += 1,
                CellOutcome::Fail { .. } => summary.fail += 1,
                CellOutcome::BudgetExceeded => summary.budget_exceeded += 1,
                CellOutcome::Error { .. } => summary.errors += 1,
            }
        }
        graphs.push(g);
        findings.extend(f);
    }
    CorpusReport {
        schema: REPORT_SCHEMA.to_string(),
        options: opts.clone(),
        checks: checks.iter().map(|c| c.id.to_string()).collect(),
        graphs,
        summary,
        findings,
    }
}
