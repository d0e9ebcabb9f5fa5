//! Pyramids, prisms, small-vertex classification, basic excess checks and
//! the shape of the nonsimple vertex set.

use crate::catalogue;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::incidence::VertexFacetIncidence;
use crate::iso::{are_equivalent, graphs_isomorphic};
use crate::lattice::{build_lattice, graph_of};
use crate::stats::stats;
use crate::vertex_set::VertexSet;

/// The lowest vertex lying in every facet but one. Such a vertex is the apex
/// of a pyramid over the facet it misses.
pub fn pyramid_apex(vfi: &VertexFacetIncidence) -> Option<usize> {
    let m = vfi.num_facets();
    (0..vfi.num_vertices()).find(|&v| vfi.facet_degree(v) + 1 == m)
}

/// Result of peeling pyramid apexes off a polytope until none is left or the
/// remainder is a polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PyramidDecomposition {
    /// Apexes in the order they were peeled, as original vertex indices.
    pub apexes: Vec<usize>,
    pub base: VertexFacetIncidence,
    /// `base_map[i]` is the original index of base vertex `i`.
    pub base_map: Vec<usize>,
}

impl PyramidDecomposition {
    pub fn fold(&self) -> usize {
        self.apexes.len()
    }

    /// Re-applies the pyramids in reverse peeling order, in original labels.
    pub fn rebuild(&self) -> VertexFacetIncidence {
        let mut vertices: VertexSet = self.base_map.iter().collect();
        let mut facets: Vec<VertexSet> = self
            .base
            .facets()
            .iter()
            .map(|f| f.map(&self.base_map))
            .collect();
        for &apex in self.apexes.iter().rev() {
            let mut next = vec![vertices];
            next.extend(facets.iter().map(|f| f.with(apex)));
            facets = next;
            vertices.insert(apex);
        }
        let d = self.base.dim() + self.apexes.len();
        VertexFacetIncidence::from_sets(d, vertices.len(), facets)
            .expect("rebuilt pyramid is valid")
    }
}

/// Peels apexes (lowest index first) while the dimension exceeds 2.
pub fn pyramid_decompose(vfi: &VertexFacetIncidence) -> PyramidDecomposition {
    let mut base = vfi.clone();
    let mut base_map: Vec<usize> = (0..vfi.num_vertices()).collect();
    let mut apexes = Vec::new();
    while base.dim() > 2 {
        let Some(apex) = pyramid_apex(&base) else {
            break;
        };
        let facet = base
            .facets()
            .iter()
            .position(|f| !f.contains(apex))
            .expect("apex misses one facet");
        let (sub, map) = base.facet_polytope(facet).expect("facet of a valid polytope");
        apexes.push(base_map[apex]);
        base_map = map.iter().map(|&v| base_map[v]).collect();
        base = sub;
    }
    PyramidDecomposition {
        apexes,
        base,
        base_map,
    }
}

/// A universal vertex of a `d`-polytope graph with at most `d - 1` nonsimple
/// vertices is a pyramid apex; returns the lowest one.
pub fn apex_from_graph(g: &Graph, d: usize) -> Result<Option<usize>> {
    let s = stats(g, d)?;
    if s.num_nonsimple() >= d {
        return Err(Error::HypothesisViolated(format!(
            "{} nonsimple vertices, at least d = {d}",
            s.num_nonsimple()
        )));
    }
    Ok(g.universal_vertices().first())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrismOrPyramid {
    Prism,
    Pyramid,
    Neither,
}

/// Tests for a simplicial prism first, then for a pyramid apex.
pub fn is_prism_or_pyramid(vfi: &VertexFacetIncidence) -> PrismOrPyramid {
    if let Ok(prism) = catalogue::simplicial_prism(vfi.dim()) {
        if are_equivalent(vfi, &prism).is_some() {
            return PrismOrPyramid::Prism;
        }
    }
    if pyramid_apex(vfi).is_some() {
        PrismOrPyramid::Pyramid
    } else {
        PrismOrPyramid::Neither
    }
}

/// Combinatorial types of `d`-polytopes with `d + 3` vertices and at most
/// `d - 1` nonsimple vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DPlus3Type {
    /// `(d-3)`-fold pyramid over the triangular prism.
    PrismPyramid,
    /// `(d-3)`-fold pyramid over the tetragonal antiwedge.
    AntiwedgePyramid,
    /// `(d-2)`-fold pyramid over the pentagon.
    PentagonPyramid,
}

impl DPlus3Type {
    pub fn as_str(self) -> &'static str {
        match self {
            DPlus3Type::PrismPyramid => "prism-pyramid",
            DPlus3Type::AntiwedgePyramid => "antiwedge-pyramid",
            DPlus3Type::PentagonPyramid => "pentagon-pyramid",
        }
    }
}

/// Peels universal vertices down to six and matches the remaining
/// 3-polytope graph.
pub fn classify_d_plus_3(g: &Graph, d: usize) -> Result<DPlus3Type> {
    if d < 3 || g.num_vertices() != d + 3 {
        return Err(Error::HypothesisViolated(format!(
            "expected d + 3 = {} vertices, got {}",
            d + 3,
            g.num_vertices()
        )));
    }
    let s = stats(g, d)?;
    if s.num_nonsimple() >= d {
        return Err(Error::HypothesisViolated(format!(
            "{} nonsimple vertices, at least d = {d}",
            s.num_nonsimple()
        )));
    }
    let mut rest = g.clone();
    while rest.num_vertices() > 6 {
        let Some(apex) = rest.universal_vertices().first() else {
            return Err(Error::Unrecognized(format!(
                "no universal vertex among {} vertices",
                rest.num_vertices()
            )));
        };
        rest = rest.remove_vertex(apex).0;
    }
    let candidates = [
        (DPlus3Type::PrismPyramid, catalogue::simplicial_prism(3)?),
        (DPlus3Type::AntiwedgePyramid, catalogue::tetragonal_antiwedge()),
        (DPlus3Type::PentagonPyramid, catalogue::pyramid_over(&catalogue::polygon(5)?)?),
    ];
    for (tag, p) in candidates {
        if graphs_isomorphic(&rest, &graph_of(&build_lattice(&p)?)).is_some() {
            return Ok(tag);
        }
    }
    Err(Error::Unrecognized(
        "six-vertex remainder matches none of the three types".into(),
    ))
}

/// Facet pairs meeting in a nonempty face other than a ridge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasicExcessReport {
    pub non_ridge_pairs: Vec<(usize, usize)>,
    /// `(facet, vertex)` pairs where the vertex is simple in the facet but not in the polytope.
    pub simple_in_facet: Vec<(usize, usize)>,
}

/// Checks that nonempty non-ridge intersections of facets consist of
/// nonsimple vertices, and that a vertex simple in a facet but nonsimple in
/// the polytope lies in a facet meeting that facet in a non-ridge.
pub fn verify_basic_excess(vfi: &VertexFacetIncidence) -> Result<BasicExcessReport> {
    let lattice = build_lattice(vfi)?;
    let g = lattice.graph();
    let d = vfi.dim();
    let facets = vfi.facets();
    let ridge = d as i32 - 2;
    let is_ridge = |i: usize, j: usize| lattice.smallest_face_containing(facets[i] & facets[j]).0 == ridge;
    let mut report = BasicExcessReport::default();
    for i in 0..facets.len() {
        for j in i + 1..facets.len() {
            let meet = facets[i] & facets[j];
            if meet.is_empty() || is_ridge(i, j) {
                continue;
            }
            if let Some(v) = meet.iter().find(|&v| g.degree(v) == d) {
                return Err(Error::LemmaViolated {
                    facet_a: i,
                    facet_b: j,
                    detail: format!("vertex {v} in the intersection {meet} is simple"),
                });
            }
            report.non_ridge_pairs.push((i, j));
        }
    }
    for (i, &f) in facets.iter().enumerate() {
        for v in f {
            if g.degree(v) == d || (g.neighbors(v) & f).len() != d - 1 {
                continue;
            }
            let witness = (0..facets.len()).find(|&j| j != i && facets[j].contains(v) && !is_ridge(i, j));
            match witness {
                Some(_) => report.simple_in_facet.push((i, v)),
                None => {
                    return Err(Error::LemmaViolated {
                        facet_a: i,
                        facet_b: i,
                        detail: format!(
                            "vertex {v} is simple in the facet but nonsimple, and every facet through it meets this one in a ridge"
                        ),
                    })
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoreKind {
    /// No nonsimple vertices.
    Empty,
    Single,
    /// Two nonsimple vertices not forming a simplex face of the small-excess type.
    Pair,
    /// `d - 2` vertices of degree `d + 1` spanning a clique.
    SimplexFace,
    /// Four vertices of degree 6 in dimension 5 inducing a 4-cycle.
    Quadrilateral,
    Other,
}

impl CoreKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CoreKind::Empty => "empty",
            CoreKind::Single => "single",
            CoreKind::Pair => "pair",
            CoreKind::SimplexFace => "simplex-face",
            CoreKind::Quadrilateral => "quadrilateral",
            CoreKind::Other => "other",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonsimpleCore {
    pub vertices: VertexSet,
    pub kind: CoreKind,
}

/// Classifies the nonsimple vertices of a graph with excess below `d`.
pub fn nonsimple_core(g: &Graph, d: usize) -> Result<NonsimpleCore> {
    let s = stats(g, d)?;
    if s.xi >= d {
        return Err(Error::ExcessTooLarge { xi: s.xi, d });
    }
    let r = s.nonsimple;
    let all_degree = |k: usize| r.iter().all(|v| s.degrees[v] == k);
    let kind = if r.is_empty() {
        CoreKind::Empty
    } else if r.len() == 1 {
        CoreKind::Single
    } else if d >= 4 && r.len() == d - 2 && all_degree(d + 1) && g.is_clique(r) {
        CoreKind::SimplexFace
    } else if r.len() == 2 {
        CoreKind::Pair
    } else if d == 5 && r.len() == 4 && all_degree(6) && spans_four_cycle(g, r) {
        CoreKind::Quadrilateral
    } else {
        CoreKind::Other
    };
    Ok(NonsimpleCore { vertices: r, kind })
}

fn spans_four_cycle(g: &Graph, r: VertexSet) -> bool {
    r.iter().all(|v| (g.neighbors(v) & r).len() == 2) && g.is_connected_within(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::*;

    #[test]
    fn decomposition_of_a_pyramid_over_a_quadrilateral() {
        let p = pyramid_fold(&polygon(4).unwrap(), 2).unwrap();
        let dec = pyramid_decompose(&p);
        assert_eq!(dec.fold(), 2);
        assert_eq!(dec.base.num_vertices(), 4);
        assert_eq!(dec.base.dim(), 2);
        assert_eq!(dec.rebuild().canonical_facets(), p.canonical_facets());
    }

    #[test]
    fn prism_is_not_a_pyramid() {
        assert_eq!(pyramid_apex(&simplicial_prism(4).unwrap()), None);
        assert_eq!(is_prism_or_pyramid(&simplicial_prism(5).unwrap()), PrismOrPyramid::Prism);
        assert_eq!(
            is_prism_or_pyramid(&bipyramid_over_simplex(4).unwrap()),
            PrismOrPyramid::Neither
        );
    }
}
