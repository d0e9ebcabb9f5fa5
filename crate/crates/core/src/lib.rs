//! Combinatorial polytopes: face lattices, graphs, acyclic orientations and
//! reconstruction of the face lattice from the graph.
//!
//! Polytopes are purely combinatorial here. A [`VertexFacetIncidence`] lists
//! the vertex sets of the facets; everything else is derived from it.

pub mod catalogue;
pub mod connectivity;
pub mod error;
pub mod graph;
pub mod incidence;
pub mod iso;
pub mod lattice;
pub mod orientation;
pub mod reconstruct;
pub mod skeleton;
pub mod stats;
pub mod structure;
pub mod vertex_set;

pub use connectivity::{balinski_check, is_k_connected_within, vertex_connectivity};
pub use error::{Error, Result};
pub use graph::Graph;
pub use incidence::VertexFacetIncidence;
pub use iso::{are_equivalent, graphs_isomorphic};
pub use lattice::{build_lattice, graph_of, k_skeleton, FaceLattice};
pub use orientation::{
    enumerate_acyclic, f_r_objective, in_a_r, indegree_histogram, is_feasible, is_final, is_good,
    is_good_at, is_initial, kalai_objective, AcyclicOrientations, Constraints, Frame, Goodness,
    IndegreeHistogram, Orientation,
};
pub use reconstruct::{
    reconstruct, reconstruct_with, CoverageVerdict, Method, Outcome, ReconstructOptions,
    ReconstructionResult,
};
pub use skeleton::{skeletons_isomorphic, Skeleton};
pub use stats::{stats, PolytopeStats};
pub use vertex_set::{VertexSet, MAX_VERTICES};
