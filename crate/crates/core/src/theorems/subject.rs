//! A graph under test together with lazily computed invariants. Every
//! invariant is computed at most once per subject, whichever check asks
//! first.

use std::cell::{OnceCell, RefCell};
use std::collections::BTreeMap;

use crate::budget::Budget;
use crate::extraconn::search::min_extra_cut;
use crate::families::FamilySpec;
use crate::graph::{Graph, VertexSet};
use crate::io::graph6;
use crate::persistence::{rho_h_with, PersistenceError, PersistenceResult, RhoConfig};

use super::CheckError;

/// Minimum h-extra cut summary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cut {
    pub value: usize,
    pub witness: VertexSet,
    /// A minimizing side leaving more than `h + 1` vertices on both sides.
    pub violator: Option<VertexSet>,
}

pub struct Subject {
    pub spec: Option<FamilySpec>,
    pub name: String,
    pub graph: Graph,
    budget: Budget,
    cuts: RefCell<BTreeMap<usize, Option<Cut>>>,
    xis: RefCell<BTreeMap<usize, Option<usize>>>,
    rho: OnceCell<Option<PersistenceResult>>,
    kappa: OnceCell<usize>,
    girth: OnceCell<Option<usize>>,
    notes: RefCell<Vec<String>>,
}

impl Subject {
    pub fn new(spec: Option<FamilySpec>, graph: Graph, budget: Budget) -> Self {
        let name = match &spec {
            Some(s) => s.to_string(),
            None => format!("g6:{}", graph6::encode(&graph)),
        };
        Subject {
            spec,
            name,
            graph,
            budget,
            cuts: RefCell::default(),
            xis: RefCell::default(),
            rho: OnceCell::new(),
            kappa: OnceCell::new(),
            girth: OnceCell::new(),
            notes: RefCell::default(),
        }
    }

    pub fn from_spec(spec: &FamilySpec, budget: Budget) -> Result<Self, CheckError> {
        let g = spec.build().map_err(|e| CheckError::Generation(e.to_string()))?;
        Ok(Subject::new(Some(spec.clone()), g, budget))
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// Records an observation worth reporting that is not a failure.
    pub fn note(&self, text: String) {
        self.notes.borrow_mut().push(text);
    }

    pub fn take_notes(&self) -> Vec<String> {
        std::mem::take(&mut *self.notes.borrow_mut())
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn connected(&self) -> bool {
        self.graph.order() > 0 && self.graph.is_connected()
    }

    pub fn delta(&self) -> usize {
        self.graph.min_degree()
    }

    pub fn regular(&self) -> Option<usize> {
        self.graph.regular_degree()
    }

    pub fn girth(&self) -> Option<usize> {
        *self.girth.get_or_init(|| self.graph.girth())
    }

    /// Vertex connectivity.
    pub fn kappa(&self) -> usize {
        *self.kappa.get_or_init(|| self.graph.vertex_connectivity())
    }

    pub fn xi(&self) -> Option<usize> {
        self.graph.xi().ok()
    }

    pub fn transitive(&self) -> bool {
        self.spec.as_ref().is_some_and(FamilySpec::vertex_transitive)
    }

    pub fn xi_h(&self, h: usize) -> Option<usize> {
        if let Some(v) = self.xis.borrow().get(&h) {
            return *v;
        }
        let v = self.graph.xi_h(h);
        self.xis.borrow_mut().insert(h, v);
        v
    }

    /// Minimum h-extra cut; `None` when there is none. The graph must be
    /// connected.
    pub fn cut(&self, h: usize) -> Result<Option<Cut>, CheckError> {
        if let Some(c) = self.cuts.borrow().get(&h) {
            return Ok(*c);
        }
        if !self.connected() {
            return Err(CheckError::Engine("graph is disconnected".into()));
        }
        let parallel = self.order() > 16;
        let c = min_extra_cut(self.graph.rows(), h, parallel, &self.budget)?.map(|c| Cut {
            value: c.value,
            witness: c.witness,
            violator: c.violator,
        });
        self.cuts.borrow_mut().insert(h, c);
        Ok(c)
    }

    pub fn lambda(&self, h: usize) -> Result<Option<usize>, CheckError> {
        Ok(self.cut(h)?.map(|c| c.value))
    }

    pub fn optimal(&self, h: usize) -> Result<bool, CheckError> {
        Ok(match self.cut(h)? {
            Some(c) => Some(c.value) == self.xi_h(h),
            None => false,
        })
    }

    pub fn is_super(&self, h: usize) -> Result<bool, CheckError> {
        Ok(self.optimal(h)? && self.cut(h)?.is_some_and(|c| c.violator.is_none()))
    }

    /// ρ' computed by search, without the no-2-extra-cut shortcut, so that
    /// results about that case are actually tested. `None` when the graph is
    /// not super-λ'.
    pub fn rho1(&self) -> Result<Option<&PersistenceResult>, CheckError> {
        if let Some(r) = self.rho.get() {
            return Ok(r.as_ref());
        }
        let r = if self.connected() && self.is_super(1)? {
            let cfg = RhoConfig {
                shortcut: false,
                budget: self.budget.clone(),
                ..RhoConfig::default()
            };
            match rho_h_with(&self.graph, 1, &cfg) {
                Ok(r) => Some(r),
                Err(PersistenceError::Budget(b)) => return Err(b.into()),
                Err(e) => return Err(CheckError::Engine(e.to_string())),
            }
        } else {
            None
        };
        Ok(self.rho.get_or_init(|| r).as_ref())
    }

    /// ρ' of a graph that the calling check has already established to be
    /// super-λ'.
    pub fn rho1_value(&self) -> Result<usize, CheckError> {
        self.rho1()?
            .map(|r| r.rho)
            .ok_or_else(|| CheckError::Engine("ρ' requested for a graph that is not super-λ'".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_are_cached_and_consistent() {
        let s = Subject::from_spec(&FamilySpec::Hypercube(4), Budget::unlimited()).unwrap();
        assert_eq!(s.name, "hypercube:4");
        assert_eq!(s.lambda(2).unwrap(), Some(8));
        assert!(s.optimal(2).unwrap());
        assert!(!s.is_super(2).unwrap());
        assert!(s.is_super(1).unwrap());
        assert_eq!(s.rho1_value().unwrap(), 2);
        assert_eq!(s.kappa(), 4);
        assert_eq!(s.girth(), Some(4));
        assert!(s.transitive());
    }

    #[test]
    fn rho_is_none_for_non_super() {
        let s = Subject::from_spec(&FamilySpec::Cycle(8), Budget::unlimited()).unwrap();
        assert!(s.rho1().unwrap().is_none());
        assert!(s.rho1_value().is_err());
    }

    #[test]
    fn untagged_graphs_are_named_by_graph6() {
        let g = crate::families::complete(4).unwrap();
        let s = Subject::new(None, g, Budget::unlimited());
        assert_eq!(s.name, "g6:C~");
        assert!(!s.transitive());
    }
}
