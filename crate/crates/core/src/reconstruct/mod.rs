//! Face lattices from graphs.

mod dp;
mod excess;
mod planar;
mod simple;

pub use excess::{
    excess_facet_classes, excess_reconstruct, excess_reconstruct_with, facet_completion, ExcessFacets,
};
pub use planar::planar_reconstruct;
pub use simple::{simple_reconstruct, simple_reconstruct_with};

use std::fmt;

use crate::connectivity::balinski_check;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::incidence::VertexFacetIncidence;
use crate::iso::{are_equivalent, graphs_isomorphic};
use crate::lattice::build_lattice;
use crate::stats::stats;
use crate::vertex_set::VertexSet;

/// Default cap on dynamic-programming states (one per vertex subset).
pub const DEFAULT_BUDGET: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReconstructOptions {
    /// Largest number of vertex-subset states a search may allocate.
    pub budget: u64,
    /// Worker threads for candidate checks; 0 uses the ambient rayon pool.
    pub threads: usize,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        ReconstructOptions {
            budget: DEFAULT_BUDGET,
            threads: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Simple,
    PyramidPeel,
    Excess,
    SmallVertex,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Simple => "simple",
            Method::PyramidPeel => "pyramid-peel",
            Method::Excess => "excess",
            Method::SmallVertex => "small-vertex",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What was checked before a reconstruction was returned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub lattice_built: bool,
    pub diamond_checked: bool,
    pub graph_round_trip: bool,
}

impl Certificate {
    pub fn all_passed(&self) -> bool {
        self.lattice_built && self.diamond_checked && self.graph_round_trip
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionResult {
    /// Facets sorted by size, then bitmask.
    pub facets: Vec<VertexSet>,
    pub method: Method,
    pub certificate: Certificate,
    /// Pyramid apexes removed before the base was reconstructed, outermost first.
    pub peeled: Vec<usize>,
}

impl ReconstructionResult {
    pub fn incidence(&self, d: usize, n: usize) -> VertexFacetIncidence {
        VertexFacetIncidence::from_sets(d, n, self.facets.clone()).expect("validated facets")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageVerdict {
    pub covered: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Reconstructed(ReconstructionResult),
    NotCovered(CoverageVerdict),
}

impl Outcome {
    pub fn result(&self) -> Option<&ReconstructionResult> {
        match self {
            Outcome::Reconstructed(r) => Some(r),
            Outcome::NotCovered(_) => None,
        }
    }

    pub fn verdict(&self) -> Option<&CoverageVerdict> {
        match self {
            Outcome::Reconstructed(_) => None,
            Outcome::NotCovered(v) => Some(v),
        }
    }
}

/// Reconstructs the facets of a `d`-polytope from its graph, or explains why
/// the graph lies outside the reconstructible classes.
pub fn reconstruct(g: &Graph, d: usize) -> Result<Outcome> {
    reconstruct_with(g, d, &ReconstructOptions::default())
}

pub fn reconstruct_with(g: &Graph, d: usize, opts: &ReconstructOptions) -> Result<Outcome> {
    if opts.threads > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::InternalValidationFailed(format!("thread pool: {e}")))?;
        pool.install(|| dispatch(g, d, opts))
    } else {
        dispatch(g, d, opts)
    }
}

fn dispatch(g: &Graph, d: usize, opts: &ReconstructOptions) -> Result<Outcome> {
    if d < 2 {
        return Err(Error::BadDimension {
            d,
            reason: "dimension must be at least 2",
        });
    }
    if !balinski_check(g, d) {
        return Err(Error::NotBalinski { d });
    }
    let s = stats(g, d)?;
    let k = s.num_nonsimple();
    let (facets, method, peeled) = if s.xi == 0 {
        (simple_reconstruct_with(g, d, opts), Method::Simple, Vec::new())
    } else if k < d && d > 2 && !g.universal_vertices().is_empty() {
        let apex = g.universal_vertices().first().unwrap();
        let (base, map) = g.remove_vertex(apex);
        let sub = match dispatch(&base, d - 1, opts) {
            Ok(Outcome::Reconstructed(r)) => r,
            Ok(other) => return Ok(other),
            Err(Error::NotBalinski { .. }) => {
                return Err(Error::InternalValidationFailed(format!(
                    "removing universal vertex {apex} leaves no ({})-polytope graph",
                    d - 1
                )))
            }
            Err(e) => return Err(e),
        };
        let mut facets = vec![g.vertices().without(apex)];
        facets.extend(sub.facets.iter().map(|f| f.map(&map).with(apex)));
        let mut peeled = vec![apex];
        peeled.extend(sub.peeled.iter().map(|&v| map[v]));
        (Ok(facets), Method::PyramidPeel, peeled)
    } else if s.xi < d && d >= 4 {
        (excess_reconstruct_with(g, d, opts), Method::Excess, Vec::new())
    } else if d <= 3 {
        (planar_reconstruct(g, d), Method::SmallVertex, Vec::new())
    } else {
        return Ok(Outcome::NotCovered(CoverageVerdict {
            covered: false,
            reason: coverage_reason(g, d, s.xi, k),
        }));
    };
    let mut facets = facets.map_err(|e| match e {
        Error::ValidationFailed(msg) => Error::InternalValidationFailed(msg),
        other => other,
    })?;
    facets.sort_by_key(|f| (f.len(), f.bits()));
    let certificate = validate(g, d, &facets)?;
    Ok(Outcome::Reconstructed(ReconstructionResult {
        facets,
        method,
        certificate,
        peeled,
    }))
}

fn coverage_reason(g: &Graph, d: usize, xi: usize, nonsimple: usize) -> String {
    let mut reasons = Vec::new();
    if xi == d {
        reasons.push(format!("excess = d (ξ={xi}, d={d})"));
    } else if xi > d {
        reasons.push(format!("excess > d (ξ={xi}, d={d})"));
    }
    if nonsimple >= d {
        reasons.push(format!("nonsimple count ≥ d ({nonsimple} nonsimple vertices)"));
    } else if g.universal_vertices().is_empty() {
        reasons.push("no universal vertex".to_string());
    }
    reasons.join("; ")
}

fn validate(g: &Graph, d: usize, facets: &[VertexSet]) -> Result<Certificate> {
    let fail = |what: String| Error::InternalValidationFailed(what);
    let vfi = VertexFacetIncidence::from_sets(d, g.num_vertices(), facets.to_vec())
        .map_err(|e| fail(format!("facets do not form an incidence: {e}")))?;
    let lattice = build_lattice(&vfi).map_err(|e| fail(format!("facets do not form a lattice: {e}")))?;
    if lattice.graph() != *g {
        return Err(fail("the reconstructed lattice has a different graph".into()));
    }
    Ok(Certificate {
        lattice_built: true,
        diamond_checked: true,
        graph_round_trip: true,
    })
}

/// Fixtures grouped by isomorphism of their graphs, each group split further
/// by combinatorial equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClass {
    /// Indices into the input list.
    pub members: Vec<usize>,
    pub lattice_classes: Vec<Vec<usize>>,
}

impl GraphClass {
    pub fn is_ambiguous(&self) -> bool {
        self.lattice_classes.len() > 1
    }
}

pub fn find_graph_ambiguities(fixtures: &[VertexFacetIncidence]) -> Result<Vec<GraphClass>> {
    let graphs: Vec<Graph> = fixtures
        .iter()
        .map(|p| build_lattice(p).map(|l| l.graph()))
        .collect::<Result<_>>()?;
    let mut classes: Vec<GraphClass> = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let home = classes
            .iter_mut()
            .find(|c| graphs_isomorphic(&graphs[c.members[0]], g).is_some());
        match home {
            Some(c) => {
                c.members.push(i);
                let sub = c
                    .lattice_classes
                    .iter_mut()
                    .find(|s| are_equivalent(&fixtures[s[0]], &fixtures[i]).is_some());
                match sub {
                    Some(s) => s.push(i),
                    None => c.lattice_classes.push(vec![i]),
                }
            }
            None => classes.push(GraphClass {
                members: vec![i],
                lattice_classes: vec![vec![i]],
            }),
        }
    }
    Ok(classes)
}
