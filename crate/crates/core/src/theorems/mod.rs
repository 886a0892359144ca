//! Machine-checkable statements about h-extra connectivity and persistence,
//! evaluated graph by graph with pass / vacuous / fail verdicts.
//!
//! A check is an implication: when its hypothesis fails on a graph the
//! verdict is [`Verdict::VacuousPass`]; otherwise the conclusion is computed
//! and a failure carries a [`Certificate`] that reproduces standalone.

mod checks;
pub mod corpus;
mod report;
mod subject;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::families::FamilySpec;
use crate::graph::{Edge, VertexSet};
use crate::io::graph6;

pub use report::{run_corpus, CellOutcome, CellReport, CorpusReport, Finding, GraphReport, RunOptions, Summary};
pub use subject::{Cut, Subject};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("unknown check id `{0}`")]
    BadCheckId(String),
    #[error("graph generation failed: {0}")]
    Generation(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("{0}")]
    Engine(String),
}

/// Standalone evidence of a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub check: String,
    /// Family spec of the graph, or `g6:<code>` for untagged graphs.
    pub graph: String,
    pub graph6: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fragment: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faults: Option<Vec<[usize; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "certificate")]
pub enum Verdict {
    Pass,
    VacuousPass,
    Fail(Box<Certificate>),
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }
}

/// Knobs shared by all checks of a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckConfig {
    /// Seed for the sampled quantifiers.
    pub seed: u64,
    /// Samples drawn per graph by the sampled checks.
    pub samples: usize,
    /// Highest h inspected by the monotonicity check.
    pub chain_depth: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 0x5eed,
            samples: 64,
            chain_depth: 3,
        }
    }
}

pub type EvalFn = fn(&Subject, &CheckConfig) -> Result<Verdict, CheckError>;

/// One evaluable statement.
#[derive(Clone, Copy)]
pub struct Check {
    pub id: &'static str,
    pub statement: &'static str,
    eval: EvalFn,
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check").field("id", &self.id).finish()
    }
}

impl Check {
    pub const fn new(id: &'static str, statement: &'static str, eval: EvalFn) -> Self {
        Check { id, statement, eval }
    }

    /// Evaluates the check; the graph is never modified.
    pub fn evaluate(&self, s: &Subject, cfg: &CheckConfig) -> Result<Verdict, CheckError> {
        (self.eval)(s, cfg)
    }
}

/// A registered result, split into parts when it has several independent
/// statements (ids such as `T2.4i` and `T2.4ii`).
#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub parts: Vec<Check>,
}

/// The registry of numbered results.
pub fn builtin_checks() -> Vec<TheoremCheck> {
    checks::registry()
}

/// Checks for statements without a number and for generator formulas.
pub fn auxiliary_checks() -> Vec<Check> {
    checks::auxiliary()
}

/// Every evaluable part: the registry followed by the auxiliary checks.
pub fn all_parts() -> Vec<Check> {
    builtin_checks()
        .into_iter()
        .flat_map(|t| t.parts)
        .chain(auxiliary_checks())
        .collect()
}

/// Resolves ids to parts. A registry id selects all of its parts; `all`
/// selects everything. Order follows the request, duplicates dropped.
pub fn select_checks<S: AsRef<str>>(ids: &[S]) -> Result<Vec<Check>, CheckError> {
    let registry = builtin_checks();
    let aux = auxiliary_checks();
    let mut out: Vec<Check> = Vec::new();
    let push = |c: Check, out: &mut Vec<Check>| {
        if !out.iter().any(|o| o.id == c.id) {
            out.push(c);
        }
    };
    for raw in ids {
        let id = raw.as_ref().trim();
        if id.eq_ignore_ascii_case("all") {
            all_parts().into_iter().for_each(|c| push(c, &mut out));
            continue;
        }
        if let Some(t) = registry.iter().find(|t| t.id.eq_ignore_ascii_case(id)) {
            t.parts.iter().for_each(|&c| push(c, &mut out));
            continue;
        }
        let part = registry
            .iter()
            .flat_map(|t| t.parts.iter())
            .chain(aux.iter())
            .find(|c| c.id.eq_ignore_ascii_case(id));
        match part {
            Some(&c) => push(c, &mut out),
            None => return Err(CheckError::BadCheckId(id.to_string())),
        }
    }
    Ok(out)
}

/// Re-runs a failed check on a fresh copy of the certificate's graph and
/// reports whether the failure reproduces.
pub fn reverify(cert: &Certificate, cfg: &CheckConfig, budget: Budget) -> Result<bool, CheckError> {
    let [check] = select_checks(&[cert.check.as_str()])?[..] else {
        return Err(CheckError::BadCheckId(cert.check.clone()));
    };
    let g = graph6::decode(&cert.graph6).map_err(|e| CheckError::Generation(e.to_string()))?;
    let spec = cert.graph.parse::<FamilySpec>().ok();
    if let Some(built) = spec.as_ref().and_then(|s| s.build().ok()) {
        if built != g {
            return Err(CheckError::Generation(format!(
                "certificate graph does not match `{}`",
                cert.graph
            )));
        }
    }
    let s = Subject::new(spec, g, budget);
    Ok(check.evaluate(&s, cfg)?.is_fail())
}

pub(crate) fn certificate(
    s: &Subject,
    check: &str,
    detail: String,
    fragment: Option<VertexSet>,
    faults: Option<&[Edge]>,
) -> Verdict {
    Verdict::Fail(Box::new(Certificate {
        check: check.to_string(),
        graph: s.name.clone(),
        graph6: graph6::encode(&s.graph),
        detail,
        fragment: fragment.map(VertexSet::to_vec),
        faults: faults.map(|f| f.iter().map(|e| [e.u, e.v]).collect()),
    }))
}
