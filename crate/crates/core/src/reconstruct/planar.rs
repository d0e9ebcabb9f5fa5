//! Polygons and 3-polytopes.
//!
//! In a 3-connected planar graph the face boundaries are exactly the induced
//! cycles whose removal leaves the graph connected, and a 3-connected graph is
//! planar iff no edge lies on three such cycles.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Facets of a polygon (`d = 2`) or 3-polytope (`d = 3`) from its graph.
pub fn planar_reconstruct(g: &Graph, d: usize) -> Result<Vec<VertexSet>> {
    match d {
        2 => polygon_edges(g),
        3 => peripheral_faces(g),
        _ => Err(Error::BadDimension {
            d,
            reason: "planar reconstruction needs d = 2 or 3",
        }),
    }
}

fn polygon_edges(g: &Graph) -> Result<Vec<VertexSet>> {
    if (0..g.num_vertices()).any(|v| g.degree(v) != 2) || !g.is_connected() {
        return Err(Error::ValidationFailed("a polygon graph is a single cycle".into()));
    }
    Ok(g.edges()
        .into_iter()
        .map(|(u, v)| VertexSet::singleton(u).with(v))
        .collect())
}

/// Vertex sets of all induced cycles of `g`.
pub(crate) fn induced_cycles(g: &Graph) -> Vec<VertexSet> {
    let mut found = Vec::new();
    for start in 0..g.num_vertices() {
        let mut path = vec![start];
        extend(g, start, &mut path, VertexSet::singleton(start), &mut found);
    }
    found.sort_by_key(|s: &VertexSet| (s.len(), s.bits()));
    found.dedup();
    found
}

fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, on_path: VertexSet, found: &mut Vec<VertexSet>) {
    let last = *path.last().unwrap();
    let interior = on_path.without(start).without(last);
    for w in g.neighbors(last).iter().filter(|&w| w > start && !on_path.contains(w)) {
        // w may touch only `last` among the interior, and `start` only when closing.
        if !(g.neighbors(w) & interior).is_empty() {
            continue;
        }
        if path.len() >= 2 && g.has_edge(w, start) {
            found.push(on_path.with(w));
        } else {
            path.push(w);
            extend(g, start, path, on_path.with(w), found);
            path.pop();
        }
    }
}

fn peripheral_faces(g: &Graph) -> Result<Vec<VertexSet>> {
    let all = g.vertices();
    let faces: Vec<VertexSet> = induced_cycles(g)
        .into_iter()
        .filter(|&c| g.is_connected_within(all - c))
        .collect();
    for (u, v) in g.edges() {
        let e = VertexSet::singleton(u).with(v);
        let count = faces.iter().filter(|f| f.is_superset(e)).count();
        if count != 2 {
            return Err(Error::ValidationFailed(format!(
                "edge ({u}, {v}) lies on {count} peripheral cycles, so the graph is not planar"
            )));
        }
    }
    if g.num_vertices() + faces.len() != g.num_edges() + 2 {
        return Err(Error::ValidationFailed("Euler's relation fails".into()));
    }
    Ok(faces)
}
