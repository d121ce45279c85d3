//! percolor: a desk-scale laboratory for the chromatic number of randomly
//! percolated graphs.
//!
//! Given a fixed graph `G`, the random subgraph `G_p` keeps each edge
//! independently with probability `p`. This crate computes the law of
//! `chi(G_p)` exactly in rational arithmetic (by subgraph enumeration),
//! estimates its tails by deterministic parallel Monte Carlo, materializes
//! the extremal set families behind the tail bounds (uncut families,
//! monotone closures, r-wise intersections), and evaluates every
//! closed-form bound in log2 domain with precondition tracking.
//!
//! Start with the runnable examples (`cargo run -p percolor --example
//! <name>` — see `examples/`), or with the `percolor` binary, which exposes
//! each solver and experiment as a subcommand.

pub mod bounds;
pub mod corpus;
pub mod dimacs;
pub mod families;
pub mod graph;
pub mod percolation;
pub mod rational;
pub mod runner;
pub mod solvers;
mod stats;

pub use graph::{EdgeSubset, Graph, Partition, VertexSet};
pub use rational::{Prob, Rat};
