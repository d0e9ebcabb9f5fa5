//! Facets of polytopes with excess between 1 and `d - 1`.
//!
//! With `R` the nonsimple vertices, facets fall into three classes:
//!
//! * facets meeting but not containing `R`, completed from the frame at a
//!   nonsimple vertex that leaves out one core neighbour;
//! * facets containing `R`, recognised as the feasible sets that are initial
//!   for an orientation minimising the count of (facet, simple sink) pairs
//!   among orientations with `R` initial, and that have a unique sink there;
//! * facets with only simple vertices, recognised once the facets at the
//!   nonsimple vertices are known: the total number of (facet, sink) pairs is
//!   then computable for every orientation and is least exactly for the good
//!   ones.

use rayon::prelude::*;

use super::dp::OrderDp;
use super::ReconstructOptions;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::{feasible_sets, Frame};
use crate::stats::stats;
use crate::structure::{nonsimple_core, CoreKind, NonsimpleCore};
use crate::vertex_set::VertexSet;

/// The unique minimal feasible set containing the frame and avoiding the
/// vertices of `nonsimple` outside the frame.
pub fn facet_completion(g: &Graph, d: usize, seed: Frame, nonsimple: VertexSet) -> Result<VertexSet> {
    let required = seed.vertices();
    let forbidden = nonsimple - required;
    let all = feasible_sets(g, d, required, forbidden);
    let minimal: Vec<VertexSet> = all
        .iter()
        .copied()
        .filter(|&s| !all.iter().any(|&t| t != s && t.is_subset(s)))
        .collect();
    match minimal.as_slice() {
        [] => Err(Error::NoCompletion { root: seed.root }),
        [one] => Ok(*one),
        _ => Err(Error::AmbiguousCompletion {
            root: seed.root,
            candidates: minimal,
        }),
    }
}

/// Sink-count cost of a simple vertex placed after `before`: the number of
/// facets through it in which all its neighbours come earlier.
fn simple_sink_cost(adj: &[VertexSet], d: usize, v: usize, before: VertexSet) -> u64 {
    let k = (adj[v] & before).len();
    if k == d {
        d as u64
    } else if k + 1 == d {
        1
    } else {
        0
    }
}

pub fn excess_reconstruct(g: &Graph, d: usize) -> Result<Vec<VertexSet>> {
    excess_reconstruct_with(g, d, &ReconstructOptions::default())
}

pub fn excess_reconstruct_with(g: &Graph, d: usize, opts: &ReconstructOptions) -> Result<Vec<VertexSet>> {
    Ok(excess_facet_classes(g, d, opts)?.all())
}

/// The recognised facets split by how they were found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcessFacets {
    pub core: NonsimpleCore,
    /// `(root, missed, facet)`: the facet through the nonsimple `root` that
    /// avoids its core neighbour `missed`.
    pub frame_facets: Vec<(usize, usize, VertexSet)>,
    pub containing_core: Vec<VertexSet>,
    pub simple_only: Vec<VertexSet>,
    /// Least number of (facet, simple sink) pairs with the core initial.
    pub min_simple_sinks: u64,
    /// Least number of (facet, sink) pairs over all orientations.
    pub min_sinks: u64,
}

impl ExcessFacets {
    /// All facets, sorted by size and then bitmask.
    pub fn all(&self) -> Vec<VertexSet> {
        let mut facets: Vec<VertexSet> = self
            .frame_facets
            .iter()
            .map(|&(_, _, f)| f)
            .chain(self.containing_core.iter().copied())
            .chain(self.simple_only.iter().copied())
            .collect();
        facets.sort_by_key(|f| (f.len(), f.bits()));
        facets.dedup();
        facets
    }
}

pub fn excess_facet_classes(g: &Graph, d: usize, opts: &ReconstructOptions) -> Result<ExcessFacets> {
    let s = stats(g, d)?;
    if d < 4 || s.xi == 0 {
        return Err(Error::HypothesisViolated(format!(
            "needs d >= 4 and positive excess, got d = {d}, excess {}",
            s.xi
        )));
    }
    let core = nonsimple_core(g, d)?;
    let r = core.vertices;
    let n = g.num_vertices();
    let adj = g.adjacency();

    let mut frame_facets = Vec::new();
    match core.kind {
        // The core is a clique for a simplex face and spans a 4-cycle for a
        // quadrilateral, so in both cases the missed vertex is a core neighbour.
        CoreKind::SimplexFace | CoreKind::Pair | CoreKind::Quadrilateral => {
            for u in r {
                for v in (r.without(u) & g.neighbors(u)).iter() {
                    let frame = Frame::new(g, u, g.neighbors(u).without(v))?;
                    frame_facets.push((u, v, facet_completion(g, d, frame, r)?));
                }
            }
        }
        CoreKind::Single => {}
        CoreKind::Empty | CoreKind::Other => {
            return Err(Error::CoreUnrecognized(format!(
                "nonsimple vertices {r} of degrees {:?}",
                r.iter().map(|v| s.degrees[v]).collect::<Vec<_>>()
            )));
        }
    }

    // Facets containing the core.
    let cost_b = |v: usize, before: VertexSet| {
        if r.contains(v) {
            0
        } else {
            simple_sink_cost(adj, d, v, before)
        }
    };
    let dp = OrderDp::new(n, r, opts.budget, cost_b)?;
    let containing = feasible_sets(g, d, r, VertexSet::EMPTY);
    let min_b = containing.iter().map(|&h| dp.through(h)).min().ok_or_else(|| {
        Error::ValidationFailed(format!("no feasible set contains the core {r}"))
    })?;
    let class_b: Vec<VertexSet> = containing
        .par_iter()
        .copied()
        .filter(|&h| {
            if dp.through(h) != min_b {
                return false;
            }
            let order = dp.witness(h, cost_b);
            let pos = position_map(&order, n);
            let sinks = h
                .iter()
                .filter(|&v| (adj[v] & h).iter().all(|w| pos[w] < pos[v]))
                .count();
            sinks == 1
        })
        .collect();
    drop(dp);
    let mut known: Vec<VertexSet> = frame_facets.iter().map(|&(_, _, f)| f).collect();
    known.extend(class_b.iter().copied());
    known.sort_by_key(|f| (f.len(), f.bits()));
    known.dedup();

    // Facets of simple vertices only.
    let cost_c = |v: usize, before: VertexSet| {
        if r.contains(v) {
            known
                .iter()
                .filter(|f| f.contains(v) && (adj[v] & **f).is_subset(before))
                .count() as u64
        } else {
            simple_sink_cost(adj, d, v, before)
        }
    };
    let dp = OrderDp::new(n, VertexSet::EMPTY, opts.budget, cost_c)?;
    let min_c = dp.minimum();
    let class_c: Vec<VertexSet> = feasible_sets(g, d, VertexSet::EMPTY, r)
        .into_par_iter()
        .filter(|&h| dp.through(h) == min_c)
        .collect();

    let classes = ExcessFacets {
        core,
        frame_facets,
        containing_core: class_b,
        simple_only: class_c,
        min_simple_sinks: min_b,
        min_sinks: min_c,
    };
    let total = classes.all().len() as u64;
    if min_b != total || min_c != total {
        return Err(Error::ValidationFailed(format!(
            "sink counts {min_b} and {min_c} disagree with {total} recognised facets"
        )));
    }
    if let Some(f) = known.iter().find(|&&f| dp.through(f) != min_c) {
        return Err(Error::ValidationFailed(format!(
            "facet {f} is not initial in any good orientation"
        )));
    }
    Ok(classes)
}

fn position_map(order: &[usize], n: usize) -> Vec<usize> {
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}
