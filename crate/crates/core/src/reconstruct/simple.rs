use rayon::prelude::*;

use super::dp::OrderDp;
use super::ReconstructOptions;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::feasible_sets;
use crate::vertex_set::VertexSet;

/// Facets of a simple `d`-polytope from its graph.
///
/// The least value of `sum 2^indegree` over acyclic orientations counts the
/// nonempty faces and is attained exactly by the good orientations. A
/// feasible set is a facet iff some minimising orientation has it initial.
pub fn simple_reconstruct(g: &Graph, d: usize) -> Result<Vec<VertexSet>> {
    simple_reconstruct_with(g, d, &ReconstructOptions::default())
}

pub fn simple_reconstruct_with(g: &Graph, d: usize, opts: &ReconstructOptions) -> Result<Vec<VertexSet>> {
    if let Some(v) = (0..g.num_vertices()).find(|&v| g.degree(v) != d) {
        return Err(Error::NotSimple {
            d,
            detail: format!("vertex {v} has degree {}", g.degree(v)),
        });
    }
    let adj = g.adjacency();
    let cost = |v: usize, before: VertexSet| 1u64 << (adj[v] & before).len();
    let dp = OrderDp::new(g.num_vertices(), VertexSet::EMPTY, opts.budget, cost)?;
    let best = dp.minimum();
    let facets = feasible_sets(g, d, VertexSet::EMPTY, VertexSet::EMPTY)
        .into_par_iter()
        .filter(|&h| dp.through(h) == best)
        .collect();
    Ok(facets)
}
