//! Isomorphism of small vertex-colored graphs by individualization and refinement.
//!
//! Both graphs are refined jointly so that color ids mean the same thing on
//! each side. Branching picks the smallest nontrivial cell, the lowest vertex
//! of `a` in it, and tries the vertices of `b` in increasing order, which makes
//! the returned bijection deterministic.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::incidence::VertexFacetIncidence;

/// A vertex-colored simple graph with dense adjacency.
#[derive(Clone, Debug)]
pub(crate) struct ColoredGraph {
    n: usize,
    color: Vec<u64>,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl ColoredGraph {
    pub(crate) fn new(n: usize) -> Self {
        ColoredGraph {
            n,
            color: vec![0; n],
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
        }
    }

    pub(crate) fn set_color(&mut self, v: usize, c: u64) {
        self.color[v] = c;
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        if !self.matrix[u * self.n + v] {
            self.matrix[u * self.n + v] = true;
            self.matrix[v * self.n + u] = true;
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    fn from_graph(g: &Graph) -> Self {
        let mut cg = ColoredGraph::new(g.num_vertices());
        for (u, v) in g.edges() {
            cg.add_edge(u, v);
        }
        cg
    }
}

/// Refines the joint coloring to a stable partition. Returns `false` as soon
/// as the two sides have different color histograms.
fn refine(a: &ColoredGraph, b: &ColoredGraph, ca: &mut Vec<u64>, cb: &mut Vec<u64>) -> bool {
    let mut classes = count_classes(ca, cb);
    loop {
        let sig = |g: &ColoredGraph, c: &[u64], v: usize| {
            let mut nb: Vec<u64> = g.adj[v].iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..a.n).map(|v| sig(a, ca, v)).collect();
        let sb: Vec<_> = (0..b.n).map(|v| sig(b, cb, v)).collect();
        let mut ids: BTreeMap<&(u64, Vec<u64>), (u64, isize)> = BTreeMap::new();
        for s in &sa {
            ids.entry(s).or_insert((0, 0)).1 += 1;
        }
        for s in &sb {
            ids.entry(s).or_insert((0, 0)).1 -= 1;
        }
        if ids.values().any(|&(_, balance)| balance != 0) {
            return false;
        }
        for (i, slot) in ids.values_mut().enumerate() {
            slot.0 = i as u64;
        }
        let new_a: Vec<u64> = sa.iter().map(|s| ids[s].0).collect();
        let new_b: Vec<u64> = sb.iter().map(|s| ids[s].0).collect();
        let new_classes = ids.len();
        *ca = new_a;
        *cb = new_b;
        if new_classes == classes {
            return true;
        }
        classes = new_classes;
    }
}

fn count_classes(ca: &[u64], cb: &[u64]) -> usize {
    let mut all: Vec<u64> = ca.iter().chain(cb).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn search(a: &ColoredGraph, b: &ColoredGraph, ca: Vec<u64>, cb: Vec<u64>) -> Option<Vec<usize>> {
    let mut sizes: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in &ca {
        *sizes.entry(c).or_default() += 1;
    }
    let target = sizes
        .iter()
        .filter(|&(_, &s)| s > 1)
        .min_by_key(|&(&c, &s)| (s, c))
        .map(|(&c, _)| c);
    let Some(cell) = target else {
        let mut map = vec![usize::MAX; a.n];
        for (x, &c) in ca.iter().enumerate() {
            map[x] = cb.iter().position(|&d| d == c).expect("balanced coloring");
        }
        let ok = (0..a.n).all(|u| a.adj[u].iter().all(|&v| b.has_edge(map[u], map[v])));
        return ok.then_some(map);
    };
    let fresh = *sizes.keys().next_back().unwrap() + 1;
    let x = ca.iter().position(|&c| c == cell).unwrap();
    for y in (0..b.n).filter(|&y| cb[y] == cell) {
        let mut na = ca.clone();
        let mut nb = cb.clone();
        na[x] = fresh;
        nb[y] = fresh;
        if refine(a, b, &mut na, &mut nb) {
            if let Some(map) = search(a, b, na, nb) {
                return Some(map);
            }
        }
    }
    None
}

/// A color- and edge-preserving bijection from `a` to `b`, if one exists.
pub(crate) fn find_isomorphism(a: &ColoredGraph, b: &ColoredGraph) -> Option<Vec<usize>> {
    if a.n != b.n || a.adj.iter().map(Vec::len).sum::<usize>() != b.adj.iter().map(Vec::len).sum() {
        return None;
    }
    let mut ca = a.color.clone();
    let mut cb = b.color.clone();
    if !refine(a, b, &mut ca, &mut cb) {
        return None;
    }
    search(a, b, ca, cb)
}

/// An edge-preserving bijection `map` with `map[v]` in `b` for `v` in `a`.
pub fn graphs_isomorphic(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
        return None;
    }
    find_isomorphism(&ColoredGraph::from_graph(a), &ColoredGraph::from_graph(b))
}

fn incidence_graph(p: &VertexFacetIncidence) -> ColoredGraph {
    let n = p.num_vertices();
    let mut g = ColoredGraph::new(n + p.num_facets());
    for (i, f) in p.facets().iter().enumerate() {
        g.set_color(n + i, 1);
        for v in *f {
            g.add_edge(v, n + i);
        }
    }
    g
}

/// A vertex bijection carrying the facets of `a` onto the facets of `b`.
pub fn are_equivalent(a: &VertexFacetIncidence, b: &VertexFacetIncidence) -> Option<Vec<usize>> {
    if a.dim() != b.dim()
        || a.num_vertices() != b.num_vertices()
        || a.num_facets() != b.num_facets()
    {
        return None;
    }
    let map = find_isomorphism(&incidence_graph(a), &incidence_graph(b))?;
    Some(map[..a.num_vertices()].to_vec())
}
