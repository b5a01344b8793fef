//! Null-space decomposition of trees and unicyclic graphs.
//!
//! Everything here is exact: the adjacency matrix is reduced over the
//! rationals with arbitrary-precision integers, so the support of the null
//! space is a clean zero/nonzero decision. On top of the decomposition the
//! crate evaluates closed formulas for the independence number and the
//! matching number of trees and unicyclic graphs, and ships brute-force
//! combinatorial oracles to check them against.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command-line front end live in the `nulldecomp` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod decomp;
pub mod error;
pub mod generate;
pub mod graph;
pub mod linalg;
pub mod oracles;
pub mod unicyclic;

pub use decomp::{decompose, root_is_matched, tree_alpha, tree_nu, NullDecomposition};
pub use error::{Error, Result};
pub use graph::{
    classify_shape, connected_components, find_cycle, pendant_trees, remove_vertices, CycleInfo,
    Graph, PendantTree, Shape, Subgraph, VertexId, VertexSet,
};
pub use linalg::{
    adjacency_matrix, null_basis, nullity, rref, support, NullBasis, Rational, RationalMatrix,
};
pub use oracles::Matching;
pub use unicyclic::{
    analyze, classify_type, is_singular, unicyclic_nullity, TypeVerdict, UnicyclicAnalysis,
};
