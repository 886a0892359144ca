//! Exact h-extra edge-connectivity: λ^(h), optimality and the super property.

mod oracle;
pub(crate) mod search;

pub use oracle::{lambda_h_oracle, lambda_h_partition_oracle, PARTITION_ORACLE_MAX};
pub(crate) use oracle::next_combination;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{Fragment, Graph};
use search::{min_extra_cut, xi_h_rows};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtraConnError {
    #[error("graph is disconnected (component orders {0:?})")]
    Disconnected(Vec<usize>),
    #[error("graph has no {0}-extra edge cut")]
    NotExtraConnected(usize),
    #[error("oracle examined its budget of {0} edge subsets")]
    OracleBudgetExceeded(u64),
    #[error("partition oracle supports at most {max} vertices, got {0}", max = PARTITION_ORACLE_MAX)]
    OracleTooLarge(usize),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl ExtraConnError {
    pub(crate) fn disconnected(g: &Graph) -> Self {
        ExtraConnError::Disconnected(g.components().iter().map(|c| c.len()).collect())
    }
}

fn require_connected(g: &Graph) -> Result<(), ExtraConnError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(ExtraConnError::disconnected(g))
    }
}

/// A minimum h-extra cut with its canonical witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinCut {
    pub h: usize,
    pub value: usize,
    /// The lexicographically smallest minimizing side.
    pub witness: Fragment,
    /// Number of distinct minimum h-extra cuts.
    pub minimizers: usize,
}

/// λ^(h)(G), or `None` when `G` has no h-extra cut.
pub fn lambda_h(g: &Graph, h: usize) -> Result<Option<MinCut>, ExtraConnError> {
    lambda_h_within(g, h, &Budget::unlimited())
}

pub fn lambda_h_within(g: &Graph, h: usize, budget: &Budget) -> Result<Option<MinCut>, ExtraConnError> {
    require_connected(g)?;
    let Some(cut) = min_extra_cut(g.rows(), h, true, budget)? else {
        return Ok(None);
    };
    Ok(Some(MinCut {
        h,
        value: cut.value,
        witness: Fragment::new(g, cut.witness).expect("witness is a proper subset"),
        minimizers: cut.minimizers,
    }))
}

pub fn is_lambda_h_optimal(g: &Graph, h: usize) -> Result<bool, ExtraConnError> {
    Ok(match lambda_h(g, h)? {
        Some(c) => Some(c.value) == g.xi_h(h),
        None => false,
    })
}

/// Result of the definition-based super-λ^(h) test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperCheck {
    pub h: usize,
    pub is_super: bool,
    pub optimal: bool,
    pub lambda: usize,
    pub xi: usize,
    /// On failure: a minimizing side that is not optimal or whose cut leaves
    /// both sides larger than `h + 1`.
    pub violating: Option<Fragment>,
}

/// Super-λ^(h) by definition: optimal, and every minimum h-extra cut has a
/// side of order exactly `h + 1`.
pub fn is_super_lambda_h_def(g: &Graph, h: usize) -> Result<SuperCheck, ExtraConnError> {
    is_super_lambda_h_def_within(g, h, &Budget::unlimited())
}

pub fn is_super_lambda_h_def_within(
    g: &Graph,
    h: usize,
    budget: &Budget,
) -> Result<SuperCheck, ExtraConnError> {
    require_connected(g)?;
    let cut = min_extra_cut(g.rows(), h, true, budget)?.ok_or(ExtraConnError::NotExtraConnected(h))?;
    let xi = xi_h_rows(g.rows(), h).expect("an h-extra cut implies a connected (h+1)-set");
    let optimal = cut.value == xi;
    let bad = if !optimal { Some(cut.witness) } else { cut.violator };
    Ok(SuperCheck {
        h,
        is_super: bad.is_none(),
        optimal,
        lambda: cut.value,
        xi,
        violating: bad.map(|x| Fragment::new(g, x).expect("proper subset")),
    })
}

/// The one-computation criterion: `G` is super-λ^(h) iff it has no
/// (h+1)-extra cut or `λ^(h+1) > ξ_h`. Exact whenever `λ^(h) <= ξ_h`.
pub fn is_super_lambda_h_fast(g: &Graph, h: usize) -> Result<bool, ExtraConnError> {
    is_super_lambda_h_fast_within(g, h, &Budget::unlimited())
}

pub fn is_super_lambda_h_fast_within(
    g: &Graph,
    h: usize,
    budget: &Budget,
) -> Result<bool, ExtraConnError> {
    require_connected(g)?;
    if min_extra_cut(g.rows(), h, true, budget)?.is_none() {
        return Err(ExtraConnError::NotExtraConnected(h));
    }
    let xi = xi_h_rows(g.rows(), h).expect("an h-extra cut implies a connected (h+1)-set");
    Ok(match min_extra_cut(g.rows(), h + 1, true, budget)? {
        None => true,
        Some(next) => next.value > xi,
    })
}

/// Per-level summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtraConnReport {
    pub h: usize,
    pub exists: bool,
    pub lambda_h: Option<usize>,
    pub xi_h: Option<usize>,
    pub optimal: bool,
    #[serde(rename = "super")]
    pub is_super: bool,
    pub witness: Option<Fragment>,
    pub violating: Option<Fragment>,
    pub all_min_fragments_count: usize,
    /// Set when `h > δ(G)`, where `λ^(h) <= ξ_h` is no longer guaranteed.
    pub beyond_min_degree: bool,
}

/// Reports for `h = 0..=h_max`, checked against `λ^(0) <= λ^(1) <= …`.
pub fn full_report(g: &Graph, h_max: usize, budget: &Budget) -> Result<Vec<ExtraConnReport>, ExtraConnError> {
    require_connected(g)?;
    let delta = g.min_degree();
    let mut out: Vec<ExtraConnReport> = Vec::with_capacity(h_max + 1);
    for h in 0..=h_max {
        let cut = min_extra_cut(g.rows(), h, true, budget)?;
        let xi = g.xi_h(h);
        let (optimal, violator) = match &cut {
            Some(c) if Some(c.value) == xi => (true, c.violator),
            Some(c) => (false, Some(c.witness)),
            None => (false, None),
        };
        let frag = |x| Fragment::new(g, x).expect("proper subset");
        out.push(ExtraConnReport {
            h,
            exists: cut.is_some(),
            lambda_h: cut.as_ref().map(|c| c.value),
            xi_h: xi,
            optimal,
            is_super: optimal && violator.is_none(),
            witness: cut.as_ref().map(|c| frag(c.witness)),
            violating: violator.filter(|_| cut.is_some()).map(frag),
            all_min_fragments_count: cut.as_ref().map_or(0, |c| c.minimizers),
            beyond_min_degree: h > delta,
        });
    }
    check_chain(&out)?;
    Ok(out)
}

fn check_chain(reports: &[ExtraConnReport]) -> Result<(), ExtraConnError> {
    for w in reports.windows(2) {
        match (w[0].lambda_h, w[1].lambda_h) {
            (Some(a), Some(b)) if a > b => {
                return Err(ExtraConnError::InternalInconsistency(format!(
                    "λ^({}) = {a} exceeds λ^({}) = {b}",
                    w[0].h, w[1].h
                )))
            }
            (None, Some(_)) => {
                return Err(ExtraConnError::InternalInconsistency(format!(
                    "λ^({}) exists but λ^({}) does not",
                    w[1].h, w[0].h
                )))
            }
            _ => {}
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn lam(g: &Graph, h: usize) -> Option<usize> {
        lambda_h(g, h).unwrap().map(|c| c.value)
    }

    #[test]
    fn lambda_examples() {
        let q4 = families::hypercube(4).unwrap();
        assert_eq!(lam(&q4, 2), Some(8));
        for (n, h) in [(8, 2), (10, 3), (6, 1), (4, 0)] {
            assert_eq!(lam(&families::cycle(n).unwrap(), h), Some(2), "C{n} h={h}");
        }
        let star = families::star_composite(3, 2).unwrap();
        assert_eq!(lam(&star, 2), None);
        let h = families::cartesian_product(
            &families::cartesian_product(&families::complete(2).unwrap(), &families::complete(3).unwrap())
                .unwrap(),
            &families::complete(3).unwrap(),
        )
        .unwrap();
        assert_eq!(lam(&h, 2), Some(9));
        assert_eq!(h.xi().unwrap(), 8);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(lambda_h(&g, 0), Err(ExtraConnError::Disconnected(vec![2, 3])));
        assert!(matches!(full_report(&g, 1, &Budget::unlimited()), Err(ExtraConnError::Disconnected(_))));
    }

    #[test]
    fn optimality_examples() {
        assert!(is_lambda_h_optimal(&families::hypercube(4).unwrap(), 2).unwrap());
        assert!(is_lambda_h_optimal(&families::cycle(8).unwrap(), 2).unwrap());
        assert!(is_lambda_h_optimal(&families::remark25_graph(), 1).unwrap());
    }

    #[test]
    fn super_by_definition() {
        let q4 = families::hypercube(4).unwrap();
        let c = is_super_lambda_h_def(&q4, 2).unwrap();
        assert!(!c.is_super && c.optimal);
        // The canonical violator is a 4-cycle; a dimension half is another.
        let v = c.violating.unwrap();
        assert_eq!((v.order(), v.boundary_size), (4, 8));
        let half = crate::VertexSet::from_iter((0..16).filter(|x| x & 8 == 0));
        assert_eq!(q4.boundary_size(half), c.lambda);
        assert!(!is_super_lambda_h_def(&families::cycle(8).unwrap(), 1).unwrap().is_super);
        assert!(is_super_lambda_h_def(&q4, 1).unwrap().is_super);
        let star = families::star_composite(3, 2).unwrap();
        assert_eq!(is_super_lambda_h_def(&star, 2), Err(ExtraConnError::NotExtraConnected(2)));
    }

    #[test]
    fn super_fast_criterion() {
        let k233 = families::cartesian_product(
            &families::cartesian_product(&families::complete(2).unwrap(), &families::complete(3).unwrap())
                .unwrap(),
            &families::complete(3).unwrap(),
        )
        .unwrap();
        assert!(is_super_lambda_h_fast(&k233, 1).unwrap());
        assert!(is_super_lambda_h_fast(&families::petersen(), 1).unwrap());
        let q4 = families::hypercube(4).unwrap();
        let f = [crate::Edge::new(1, 9), crate::Edge::new(2, 10), crate::Edge::new(4, 12)];
        let faulted = q4.without_edges(&f);
        assert!(!is_super_lambda_h_fast(&faulted, 1).unwrap());
        assert_eq!(lam(&faulted, 2), Some(5));
        assert_eq!(faulted.xi().unwrap(), 5);
    }

    #[test]
    fn reports() {
        let b = Budget::unlimited();
        let q4 = families::hypercube(4).unwrap();
        let r = full_report(&q4, 2, &b).unwrap();
        let lambdas: Vec<_> = r.iter().map(|x| x.lambda_h).collect();
        assert_eq!(lambdas, vec![Some(4), Some(6), Some(8)]);
        let supers: Vec<_> = r.iter().map(|x| x.is_super).collect();
        assert_eq!(supers, vec![true, true, false]);
        let p = full_report(&families::petersen(), 2, &b).unwrap();
        assert_eq!(p[0].lambda_h, Some(3));
        assert_eq!(p[1].lambda_h, Some(4));
        assert!(p[2].lambda_h.unwrap() > 4);
        let k4 = full_report(&families::complete(4).unwrap(), 1, &b).unwrap();
        assert_eq!((k4[0].lambda_h, k4[1].lambda_h), (Some(3), Some(4)));
        let deep = full_report(&families::cycle(12).unwrap(), 3, &b).unwrap();
        assert!(deep[3].beyond_min_degree && !deep[2].beyond_min_degree);
    }

    #[test]
    fn chain_violation_is_reported() {
        let mk = |h, l: Option<usize>| ExtraConnReport {
            h,
            exists: l.is_some(),
            lambda_h: l,
            xi_h: None,
            optimal: false,
            is_super: false,
            witness: None,
            violating: None,
            all_min_fragments_count: 0,
            beyond_min_degree: false,
        };
        assert!(check_chain(&[mk(0, Some(3)), mk(1, Some(2))]).is_err());
        assert!(check_chain(&[mk(0, None), mk(1, Some(2))]).is_err());
        assert!(check_chain(&[mk(0, Some(2)), mk(1, None)]).is_ok());
    }
}
