//! Bounded max-coloring of vertex- and edge-weighted graphs.
//!
//! A bounded max-coloring partitions the items of a graph (vertices or
//! edges) into proper color classes of at most `b` items each; a class
//! weighs as much as its heaviest item and the objective is the sum of
//! class weights. This crate provides approximation algorithms for
//! bipartite graphs, general graphs and trees, exact solvers to check them
//! against, and the gadget construction showing the edge version is hard on
//! trees.

pub mod coloring;
pub mod ec;
pub mod error;
pub mod exact;
pub mod gen;
pub mod graph;
pub mod registry;
pub mod vc;
pub mod weight;

pub use coloring::{
    ordered_b_partition, validate_classes, validate_coloring, Coloring, OrderedPartition,
    ValidityReport, Violation,
};
pub use error::{Error, Result};
pub use registry::{AlgorithmRegistry, ColoringAlgorithm, SolveParams};
pub use graph::{structure_probe, Bipartition, Mode, StructureInfo, WeightedGraph};
pub use weight::Weight;
