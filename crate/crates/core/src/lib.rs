//! Edge metric dimension and metric dimension of finite connected graphs.
//!
//! * [`graph`], [`catalog`], [`io`]: connected simple graphs, distance tables,
//!   named families and the edge-list text format.
//! * [`resolve`]: representations, generator checks and exhaustive oracles.
//! * [`solver`]: the covering program for edge metric bases, an exact
//!   branch-and-bound hitting-set solver and an LP-file writer.
//! * [`products`]: hierarchical, corona and bridge-cycle constructions, and
//!   the closed-form bounds and values for their edge metric dimension.
//! * [`cli`]: the command-line front end used by the `edgemetric` binary.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod products;
pub mod random;
pub mod resolve;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{all_pairs_distances, vertex_edge_distance, DistanceTables, Dist, Graph, SimpleGraph};
pub use resolve::OrderedVertexSet;
pub use solver::{edim_via_ilp, HittingSetInstance, SolveOptions, SolveResult};
