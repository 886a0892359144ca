//! Persistence ρ^(h): how many arbitrary edge faults a super-λ^(h) graph
//! tolerates while staying super-λ^(h).
//!
//! Fault sets are scanned by size `1, 2, …, δ − 1` and, within a size, in
//! lexicographic order of edge indices. The first failing set is the
//! witness. If none fails, deleting the edges at a vertex of minimum degree
//! disconnects the graph, so `ρ^(h) = δ − 1`.

mod bound;

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::extraconn::search::{min_extra_cut, status};
use crate::extraconn::{is_super_lambda_h_def_within, ExtraConnError, SuperCheck};
use crate::graph::{Edge, EdgeSet, Graph};
use bound::{FaultBound, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PersistenceError {
    #[error("graph is disconnected (component orders {0:?})")]
    Disconnected(Vec<usize>),
    #[error("graph has no {0}-extra edge cut")]
    NotExtraConnected(usize),
    #[error("graph is not super-λ^({})", .0.h)]
    NotSuper(Box<SuperCheck>),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl From<ExtraConnError> for PersistenceError {
    fn from(e: ExtraConnError) -> Self {
        match e {
            ExtraConnError::Disconnected(c) => PersistenceError::Disconnected(c),
            ExtraConnError::NotExtraConnected(h) => PersistenceError::NotExtraConnected(h),
            ExtraConnError::Budget(b) => PersistenceError::Budget(b),
            other => PersistenceError::InternalInconsistency(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shortcut {
    None,
    /// `h = 1` and the graph has no 2-extra cut, which forces `ρ' = δ − 1`.
    NoNextLevelCut,
    /// Some fault sets were settled by the fault bound.
    FaultBound,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Fault sets examined.
    pub fault_sets: u64,
    /// Settled as super by the fault bound.
    pub bound_accepted: u64,
    /// Settled as not super because `G − F` is disconnected.
    pub disconnected: u64,
    /// Settled by a full minimum-cut computation.
    pub exact_checks: u64,
    /// Bipartitions indexed for the fault bound.
    pub indexed_sides: u64,
}

impl SearchStats {
    /// Share of examined fault sets that needed no full cut computation.
    pub fn cheap_fraction(&self) -> f64 {
        if self.fault_sets == 0 {
            return 1.0;
        }
        1.0 - self.exact_checks as f64 / self.fault_sets as f64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistenceResult {
    pub h: usize,
    pub rho: usize,
    /// A smallest fault set after which the graph is no longer super.
    pub witness: Option<EdgeSet>,
    /// No fault set of size at most `δ − 1` breaks the property.
    pub ceiling_reached: bool,
    pub shortcut_used: Shortcut,
    /// Set for graphs of minimum degree at most 1, where `ρ = 0` is forced.
    pub low_degree: bool,
    pub stats: SearchStats,
}

#[derive(Clone, Debug)]
pub struct RhoConfig {
    /// Use the fault bound before any full computation.
    pub prune: bool,
    /// Allow the no-2-extra-cut shortcut at `h = 1`.
    pub shortcut: bool,
    /// Fault sets evaluated together per parallel batch.
    pub batch: usize,
    pub budget: Budget,
}

impl Default for RhoConfig {
    fn default() -> Self {
        RhoConfig {
            prune: true,
            shortcut: true,
            batch: 2048,
            budget: Budget::unlimited(),
        }
    }
}

impl RhoConfig {
    /// Every fault set checked by definition, no shortcuts.
    pub fn exhaustive() -> Self {
        RhoConfig {
            prune: false,
            shortcut: false,
            ..RhoConfig::default()
        }
    }
}

pub fn rho_h(g: &Graph, h: usize) -> Result<PersistenceResult, PersistenceError> {
    rho_h_with(g, h, &RhoConfig::default())
}

/// Reference computation: every fault set is settled by the full check.
pub fn rho_h_bruteforce(g: &Graph, h: usize) -> Result<PersistenceResult, PersistenceError> {
    rho_h_with(g, h, &RhoConfig::exhaustive())
}

/// `Some(δ − 1)` when the super-λ' graph `g` has no 2-extra cut.
pub fn not_lambda2_shortcut(g: &Graph) -> Option<usize> {
    let none = min_extra_cut(g.rows(), 2, true, &Budget::unlimited())
        .expect("unlimited budget")
        .is_none();
    none.then(|| g.min_degree().saturating_sub(1))
}

pub fn rho_h_with(g: &Graph, h: usize, cfg: &RhoConfig) -> Result<PersistenceResult, PersistenceError> {
    let check = is_super_lambda_h_def_within(g, h, &cfg.budget)?;
    if !check.is_super {
        return Err(PersistenceError::NotSuper(Box::new(check)));
    }
    let delta = g.min_degree();
    let mut result = PersistenceResult {
        h,
        rho: delta.saturating_sub(1),
        witness: None,
        ceiling_reached: true,
        shortcut_used: Shortcut::None,
        low_degree: delta <= 1,
        stats: SearchStats::default(),
    };
    if delta <= 1 {
        return Ok(result);
    }
    if cfg.shortcut && h == 1 && not_lambda2_shortcut(g).is_some() {
        result.shortcut_used = Shortcut::NoNextLevelCut;
        return Ok(result);
    }
    let max_faults = delta - 1;
    let fb = if cfg.prune {
        let fb = FaultBound::new(g, h, max_faults, &cfg.budget)?;
        result.stats.indexed_sides = fb.stored() as u64;
        Some(fb)
    } else {
        None
    };
    let counters = Counters::default();
    for size in 1..=max_faults {
        if let Some(f) = first_failure(g, h, size, fb.as_ref(), cfg, &counters)? {
            result.rho = size - 1;
            result.witness = Some(f);
            result.ceiling_reached = false;
            break;
        }
    }
    result.stats = SearchStats {
        indexed_sides: result.stats.indexed_sides,
        ..counters.snapshot()
    };
    if result.stats.bound_accepted > 0 {
        result.shortcut_used = Shortcut::FaultBound;
    }
    Ok(result)
}

#[derive(Default)]
struct Counters {
    fault_sets: AtomicU64,
    bound_accepted: AtomicU64,
    disconnected: AtomicU64,
    exact_checks: AtomicU64,
}

impl Counters {
    fn snapshot(&self) -> SearchStats {
        SearchStats {
            fault_sets: self.fault_sets.load(Ordering::Relaxed),
            bound_accepted: self.bound_accepted.load(Ordering::Relaxed),
            disconnected: self.disconnected.load(Ordering::Relaxed),
            exact_checks: self.exact_checks.load(Ordering::Relaxed),
            indexed_sides: 0,
        }
    }
}

/// Whether `G − F` stays super-λ^(h).
fn survives(
    g: &Graph,
    h: usize,
    faults: &[Edge],
    fb: Option<&FaultBound>,
    budget: &Budget,
    counters: &Counters,
) -> Result<bool, BudgetExceeded> {
    counters.fault_sets.fetch_add(1, Ordering::Relaxed);
    let rows = g.rows_without(faults);
    if let Some(fb) = fb {
        match fb.check(&rows, faults) {
            Verdict::Accepted => {
                counters.bound_accepted.fetch_add(1, Ordering::Relaxed);
                return Ok(true);
            }
            Verdict::Disconnected => {
                counters.disconnected.fetch_add(1, Ordering::Relaxed);
                return Ok(false);
            }
            Verdict::Unknown => {}
        }
    }
    counters.exact_checks.fetch_add(1, Ordering::Relaxed);
    Ok(status(&rows, h, false, budget)?.is_super())
}

/// The lexicographically first fault set of the given size that breaks the
/// property, scanning batches in order and each batch in parallel.
fn first_failure(
    g: &Graph,
    h: usize,
    size: usize,
    fb: Option<&FaultBound>,
    cfg: &RhoConfig,
    counters: &Counters,
) -> Result<Option<EdgeSet>, BudgetExceeded> {
    let edges = g.edges();
    let m = edges.len();
    if size > m {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut more = true;
    let batch_len = cfg.batch.max(1);
    while more {
        cfg.budget.check()?;
        let mut batch: Vec<Vec<Edge>> = Vec::with_capacity(batch_len);
        while more && batch.len() < batch_len {
            batch.push(idx.iter().map(|&i| edges[i]).collect());
            more = crate::extraconn::next_combination(&mut idx, m);
        }
        let verdicts: Vec<Result<bool, BudgetExceeded>> = batch
            .par_iter()
            .map(|f| survives(g, h, f, fb, &cfg.budget, counters))
            .collect();
        for (f, v) in batch.iter().zip(verdicts) {
            if !v? {
                return Ok(Some(EdgeSet::from_edges(f.iter().copied())));
            }
        }
    }
    Ok(None)
}

/// Whether `G − F` is super-λ^(h).
pub fn super_after_faults(g: &Graph, f: &EdgeSet, h: usize) -> bool {
    let budget = Budget::unlimited();
    let faults: Vec<Edge> = f.iter().copied().filter(|e| g.has_edge(e.u, e.v)).collect();
    let counters = Counters::default();
    let fb = FaultBound::new(g, h, faults.len(), &budget).expect("unlimited budget");
    survives(g, h, &faults, Some(&fb), &budget, &counters).expect("unlimited budget")
}
