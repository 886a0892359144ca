//! Exact extra edge-connectivity toolkit for small graphs.
//!
//! For a connected graph `G` and `h >= 0`, an *h-extra edge cut* is an edge
//! set whose removal disconnects `G` so that every component has more than
//! `h` vertices. The crate computes the minimum size `λ^(h)` of such a cut,
//! compares it with `ξ_h` (the smallest boundary of a connected `(h+1)`-set),
//! decides whether every minimum cut isolates a connected `(h+1)`-set, and
//! measures how many edge faults that property survives.

pub mod budget;
pub mod families;
pub mod extraconn;
pub mod graph;
pub mod io;
pub mod persistence;
pub mod theorems;

pub use budget::{Budget, BudgetExceeded};
pub use graph::{Edge, EdgeSet, Fragment, Graph, GraphError, VertexSet};
