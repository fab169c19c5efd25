//! Parking functions on rooted weighted graphs, vector parking functions and
//! two-dimensional U-parking functions, with the acyclic-orientation
//! bijection and the block-permutation invariance classification.

pub mod classify;
pub mod error;
pub mod generate;
pub mod graph;
pub mod lattice;
pub mod orientations;
pub mod parking;

pub use error::{Error, Limits, Result};
pub use graph::{build_graph, GraphBuilder, RootedWeightedGraph, VertexSet};
pub use lattice::{LatticePath, PairSequence, WeightGrid};
pub use orientations::Orientation;
pub use parking::ParkingVector;
