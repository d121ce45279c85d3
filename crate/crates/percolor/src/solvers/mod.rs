//! Exact combinatorial solvers: chromatic number, independence number,
//! minimum monochromatic edges under a color budget, critical-subgraph
//! extraction, and exact Hadwiger numbers on tiny graphs.
//!
//! Every solver is a pure function of its inputs, deterministic, and returns
//! a witness that re-validates under the independent checkers in [`check`].

mod coloring;
mod critical;
mod hadwiger;
mod independence;
mod mono;

pub mod check;

pub use coloring::{chromatic_number, is_d_colorable};
pub use critical::critical_subgraph;
pub use hadwiger::{hadwiger_number, hadwiger_number_with_cap, DEFAULT_HADWIGER_CAP};
pub use independence::independence_number;
pub use mono::min_monochromatic_edges;

pub(crate) use coloring::{chi_adjacency, decide_colorable_adjacency};

use thiserror::Error;

/// The outcome of an exact solve: the optimum, a witness realizing it, and
/// how many search nodes were expanded along the way.
#[derive(Clone, Debug)]
pub struct SolveResult<W> {
    pub value: u64,
    pub witness: W,
    pub nodes_explored: u64,
}

#[derive(Debug, Error, PartialEq)]
pub enum SolverError {
    #[error("graph has {n} vertices, exceeding the cap of {cap}")]
    VertexCapExceeded { n: usize, cap: usize },
    #[error("expected chromatic number {expected}, solver found {found}")]
    ChromaticMismatch { expected: u64, found: u64 },
}
