//! Acyclic orientations of polytope graphs and the quantities defined on them.
//!
//! Edges always point from the earlier to the later vertex of some linear
//! extension: a sink has no outgoing edge, an initial set is a down-set.

use rayon::prelude::*;

use crate::connectivity::is_k_connected_within;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::FaceLattice;
use crate::vertex_set::VertexSet;

/// An acyclic orientation of a graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    graph: Graph,
    out: Vec<VertexSet>,
}

impl Orientation {
    /// Orients every edge as given; each edge of `g` must appear exactly once.
    pub fn new(g: &Graph, directed: &[(usize, usize)]) -> Result<Self> {
        let n = g.num_vertices();
        let mut out = vec![VertexSet::EMPTY; n];
        for &(u, v) in directed {
            if u >= n || v >= n || !g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("({u}, {v}) is not an edge")));
            }
            if out[u].contains(v) || out[v].contains(u) {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) oriented twice")));
            }
            out[u].insert(v);
        }
        if directed.len() != g.num_edges() {
            return Err(Error::InvalidGraph("some edge is not oriented".into()));
        }
        if !is_acyclic(&out) {
            return Err(Error::InvalidGraph("orientation has a directed cycle".into()));
        }
        Ok(Orientation {
            graph: g.clone(),
            out,
        })
    }

    /// Orients each edge from the vertex that comes first in `order`.
    pub fn from_order(g: &Graph, order: &[usize]) -> Result<Self> {
        let n = g.num_vertices();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::InvalidGraph("order is not a permutation".into()));
            }
            pos[v] = i;
        }
        if order.len() != n {
            return Err(Error::InvalidGraph("order is not a permutation".into()));
        }
        let out = (0..n)
            .map(|v| g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect())
            .collect();
        Ok(Orientation {
            graph: g.clone(),
            out,
        })
    }

    pub(crate) fn from_out_sets(g: &Graph, out: Vec<VertexSet>) -> Self {
        debug_assert!(is_acyclic(&out));
        Orientation {
            graph: g.clone(),
            out,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.graph.neighbors(v) - self.out[v]
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.in_neighbors(v).len()
    }

    /// Directed edges `(from, to)` in the order of [`Graph::edges`].
    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| if self.out[u].contains(v) { (u, v) } else { (v, u) })
            .collect()
    }

    /// Vertices of `within` with no outgoing edge inside `within`.
    pub fn sinks_within(&self, within: VertexSet) -> VertexSet {
        within
            .iter()
            .filter(|&v| (self.out[v] & within).is_empty())
            .collect()
    }

    /// A linear extension, taking the lowest available vertex first.
    pub fn topological_order(&self) -> Vec<usize> {
        let n = self.out.len();
        let mut placed = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let v = (0..n)
                .find(|&v| !placed.contains(v) && self.in_neighbors(v).is_subset(placed))
                .expect("acyclic");
            placed.insert(v);
            order.push(v);
        }
        order
    }

    /// This orientation with the edges inside `within` directed as in `other`.
    pub fn redirected_within(&self, other: &Orientation, within: VertexSet) -> Result<Orientation> {
        if other.graph != self.graph {
            return Err(Error::GraphMismatch);
        }
        let out: Vec<VertexSet> = (0..self.out.len())
            .map(|v| {
                if within.contains(v) {
                    (self.out[v] - within) | (other.out[v] & within)
                } else {
                    self.out[v]
                }
            })
            .collect();
        if !is_acyclic(&out) {
            return Err(Error::InvalidGraph("redirection creates a directed cycle".into()));
        }
        Ok(Orientation {
            graph: self.graph.clone(),
            out,
        })
    }
}

impl std::fmt::Debug for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("Orientation").field(&self.directed_edges()).finish()
    }
}

fn is_acyclic(out: &[VertexSet]) -> bool {
    let n = out.len();
    let mut indeg = vec![0usize; n];
    for o in out {
        for w in *o {
            indeg[w] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for w in out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    seen == n
}

fn reaches(out: &[VertexSet], from: usize, to: usize) -> bool {
    let mut seen = VertexSet::singleton(from);
    let mut frontier = seen;
    while !frontier.is_empty() {
        if seen.contains(to) {
            return true;
        }
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next | out[v];
        }
        frontier = next - seen;
        seen = seen | frontier;
    }
    seen.contains(to)
}

/// Constraints on enumerated orientations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    /// Every edge leaving this set points outward.
    pub forced_initial: VertexSet,
    /// Directed pairs that must appear as given.
    pub forced_edges: Vec<(usize, usize)>,
}

impl Constraints {
    pub fn initial(set: VertexSet) -> Self {
        Constraints {
            forced_initial: set,
            forced_edges: Vec::new(),
        }
    }
}

/// Depth-first enumeration of acyclic orientations.
///
/// Forced directions are placed first; the free edges are then decided in
/// [`Graph::edges`] order, forward (`u -> v` with `u < v`) before backward,
/// skipping a direction only when it would close a cycle. Any acyclic
/// partial orientation extends to a full one, so every leaf is an output.
#[derive(Clone, Debug)]
pub struct AcyclicOrientations {
    graph: Graph,
    free: Vec<(usize, usize)>,
    out: Vec<VertexSet>,
    /// Direction chosen at each decided depth: 0 forward, 1 backward.
    choices: Vec<u8>,
    floor: usize,
    started: bool,
    done: bool,
}

/// All acyclic orientations of `g` meeting the constraints, each exactly once,
/// in a deterministic order.
pub fn enumerate_acyclic(g: &Graph, constraints: &Constraints) -> Result<AcyclicOrientations> {
    let n = g.num_vertices();
    let mut out = vec![VertexSet::EMPTY; n];
    let force = |u: usize, v: usize, out: &mut Vec<VertexSet>| -> Result<()> {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return Err(Error::InconsistentConstraints(format!("({u}, {v}) is not an edge")));
        }
        if out[v].contains(u) {
            return Err(Error::InconsistentConstraints(format!(
                "edge {{{u}, {v}}} is forced in both directions"
            )));
        }
        out[u].insert(v);
        Ok(())
    };
    let init = constraints.forced_initial;
    if !init.is_subset(g.vertices()) {
        return Err(Error::InconsistentConstraints("initial set out of range".into()));
    }
    for u in init {
        for w in g.neighbors(u) - init {
            force(u, w, &mut out)?;
        }
    }
    for &(u, v) in &constraints.forced_edges {
        force(u, v, &mut out)?;
    }
    if !is_acyclic(&out) {
        return Err(Error::InconsistentConstraints(
            "forced edges contain a directed cycle".into(),
        ));
    }
    let free = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !out[u].contains(v) && !out[v].contains(u))
        .collect();
    Ok(AcyclicOrientations {
        graph: g.clone(),
        free,
        out,
        choices: Vec::new(),
        floor: 0,
        started: false,
        done: false,
    })
}

impl AcyclicOrientations {
    fn apply(&mut self, depth: usize, choice: u8) -> bool {
        let (u, v) = self.free[depth];
        let (a, b) = if choice == 0 { (u, v) } else { (v, u) };
        if reaches(&self.out, b, a) {
            return false;
        }
        self.out[a].insert(b);
        self.choices.push(choice);
        true
    }

    fn undo(&mut self) -> u8 {
        let depth = self.choices.len() - 1;
        let choice = self.choices.pop().unwrap();
        let (u, v) = self.free[depth];
        let (a, b) = if choice == 0 { (u, v) } else { (v, u) };
        self.out[a].remove(b);
        choice
    }

    fn descend(&mut self) {
        while self.choices.len() < self.free.len() {
            let depth = self.choices.len();
            let placed = self.apply(depth, 0) || self.apply(depth, 1);
            debug_assert!(placed);
        }
    }

    /// Moves to the next leaf; false when the subtree above `floor` is exhausted.
    fn step(&mut self) -> bool {
        while self.choices.len() > self.floor {
            let depth = self.choices.len() - 1;
            let last = self.undo();
            if last == 0 && self.apply(depth, 1) {
                self.descend();
                return true;
            }
        }
        false
    }

    /// Number of edges whose direction is decided by the search.
    pub fn num_free_edges(&self) -> usize {
        self.free.len()
    }

    /// Splits the remaining search into independent subtrees by fixing the
    /// directions of the next `depth` free edges. Concatenating the parts in
    /// order yields exactly the sequence this iterator would produce.
    pub fn split(&self, depth: usize) -> Vec<AcyclicOrientations> {
        assert!(!self.started, "partition a fresh enumeration");
        let target = (self.floor + depth).min(self.free.len());
        let mut parts = Vec::new();
        let mut cur = self.clone();
        fn rec(cur: &mut AcyclicOrientations, target: usize, parts: &mut Vec<AcyclicOrientations>) {
            let depth = cur.choices.len();
            if depth == target {
                let mut part = cur.clone();
                part.floor = target;
                parts.push(part);
                return;
            }
            for choice in [0u8, 1] {
                if cur.apply(depth, choice) {
                    rec(cur, target, parts);
                    cur.undo();
                }
            }
        }
        rec(&mut cur, target, &mut parts);
        parts
    }
}

impl Iterator for AcyclicOrientations {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
        } else if !self.step() {
            self.done = true;
            return None;
        }
        Some(Orientation::from_out_sets(&self.graph, self.out.clone()))
    }
}

/// Which faces must have a unique sink.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Goodness {
    #[default]
    Facets,
    AllFaces,
}

/// Every facet graph has exactly one sink.
pub fn is_good(o: &Orientation, lattice: &FaceLattice) -> Result<bool> {
    is_good_at(o, lattice, Goodness::Facets)
}

pub fn is_good_at(o: &Orientation, lattice: &FaceLattice, level: Goodness) -> Result<bool> {
    if o.graph != lattice.graph() {
        return Err(Error::GraphMismatch);
    }
    let unique = |f: VertexSet| o.sinks_within(f).len() == 1;
    Ok(match level {
        Goodness::Facets => lattice.facets().iter().all(|&f| unique(f)),
        Goodness::AllFaces => lattice.faces().filter(|&(r, _)| r >= 0).all(|(_, f)| unique(f)),
    })
}

/// `counts[k]` is the number of simple vertices (degree `d`) with indegree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndegreeHistogram {
    pub counts: Vec<usize>,
}

impl IndegreeHistogram {
    pub fn get(&self, k: usize) -> usize {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

pub fn indegree_histogram(o: &Orientation, d: usize) -> IndegreeHistogram {
    let g = o.graph();
    let max = g.degrees().into_iter().max().unwrap_or(0);
    let mut counts = vec![0; max + 1];
    for v in 0..g.num_vertices() {
        if g.degree(v) == d {
            counts[o.indegree(v)] += 1;
        }
    }
    IndegreeHistogram { counts }
}

/// `h[d-1] + d * h[d]`: the number of (facet, simple sink) pairs.
pub fn f_r_objective(h: &IndegreeHistogram, d: usize) -> u64 {
    let below = if d == 0 { 0 } else { h.get(d - 1) };
    below as u64 + d as u64 * h.get(d) as u64
}

/// Sum over all vertices of `2^indegree`.
pub fn kalai_objective(o: &Orientation) -> u128 {
    (0..o.graph().num_vertices())
        .map(|v| 1u128 << o.indegree(v))
        .sum()
}

/// Induced, `(d-1)`-connected, and every simple vertex inside has exactly
/// `d - 1` neighbours inside.
pub fn is_feasible(g: &Graph, d: usize, subset: VertexSet) -> bool {
    if subset.is_empty() || d == 0 || !subset.is_subset(g.vertices()) {
        return false;
    }
    let degrees_ok = subset
        .iter()
        .all(|v| g.degree(v) != d || (g.neighbors(v) & subset).len() == d - 1);
    degrees_ok && is_k_connected_within(g.adjacency(), subset, d - 1)
}

/// No edge enters `subset` from outside.
pub fn is_initial(o: &Orientation, subset: VertexSet) -> bool {
    subset.iter().all(|v| o.in_neighbors(v).is_subset(subset))
}

/// No edge leaves `subset`.
pub fn is_final(o: &Orientation, subset: VertexSet) -> bool {
    subset.iter().all(|v| o.out_neighbors(v).is_subset(subset))
}

/// Every feasible vertex set containing `required` and avoiding `forbidden`,
/// ordered by size and then by bitmask.
pub fn feasible_sets(g: &Graph, d: usize, required: VertexSet, forbidden: VertexSet) -> Vec<VertexSet> {
    if d < 2 || !required.is_disjoint(forbidden) {
        return Vec::new();
    }
    let n = g.num_vertices();
    let mut found = Vec::new();
    let mut search = FeasibleSearch {
        g,
        d,
        n,
        found: &mut found,
    };
    search.rec(0, required, forbidden);
    let mut found: Vec<VertexSet> = found
        .into_par_iter()
        .filter(|&s| is_k_connected_within(g.adjacency(), s, d - 1))
        .collect();
    found.sort_by_key(|s| (s.len(), s.bits()));
    found
}

struct FeasibleSearch<'a> {
    g: &'a Graph,
    d: usize,
    n: usize,
    found: &'a mut Vec<VertexSet>,
}

impl FeasibleSearch<'_> {
    /// Degree bounds for vertices already included, given the undecided ones.
    fn consistent(&self, inside: VertexSet, outside: VertexSet) -> bool {
        inside.iter().all(|v| {
            let nb = self.g.neighbors(v);
            let lo = (nb & inside).len();
            let hi = (nb - outside).len();
            if self.g.degree(v) == self.d {
                lo <= self.d - 1 && hi >= self.d - 1
            } else {
                hi >= self.d - 1
            }
        })
    }

    fn rec(&mut self, next: usize, inside: VertexSet, outside: VertexSet) {
        if !self.consistent(inside, outside) {
            return;
        }
        let mut v = next;
        while v < self.n && (inside.contains(v) || outside.contains(v)) {
            v += 1;
        }
        if v == self.n {
            if !inside.is_empty() {
                self.found.push(inside);
            }
            return;
        }
        self.rec(v + 1, inside, outside.with(v));
        self.rec(v + 1, inside.with(v), outside);
    }
}

/// A star in the graph: a root and some of its neighbours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frame {
    pub root: usize,
    pub leaves: VertexSet,
}

impl Frame {
    pub fn new(g: &Graph, root: usize, leaves: VertexSet) -> Result<Self> {
        if root >= g.num_vertices() || !leaves.is_subset(g.neighbors(root)) {
            return Err(Error::InvalidGraph(format!(
                "{leaves} is not a set of neighbours of {root}"
            )));
        }
        Ok(Frame { root, leaves })
    }

    pub fn size(&self) -> usize {
        self.leaves.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.leaves.with(self.root)
    }
}

/// A feasible set containing the clique `r` that is initial in `o` with `r`
/// initial inside it; the smallest such set by size, then bitmask.
pub fn in_a_r(o: &Orientation, d: usize, r: VertexSet) -> Result<Option<VertexSet>> {
    let g = o.graph();
    if !g.is_clique(r) || !r.is_subset(g.vertices()) {
        return Err(Error::RNotClique(r));
    }
    if !is_initial(o, r) {
        return Ok(None);
    }
    let order = o.topological_order();
    let mut best: Option<VertexSet> = None;
    let mut stack = vec![(0usize, VertexSet::EMPTY)];
    while let Some((i, ideal)) = stack.pop() {
        if i == order.len() {
            if r.is_subset(ideal) && is_feasible(g, d, ideal) {
                let better = best.is_none_or(|b| (ideal.len(), ideal.bits()) < (b.len(), b.bits()));
                if better {
                    best = Some(ideal);
                }
            }
            continue;
        }
        let v = order[i];
        if !r.contains(v) {
            stack.push((i + 1, ideal));
        }
        if o.in_neighbors(v).is_subset(ideal) {
            stack.push((i + 1, ideal.with(v)));
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_six_orientations() {
        let g = Graph::complete(3);
        assert_eq!(enumerate_acyclic(&g, &Constraints::default()).unwrap().count(), 6);
    }

    #[test]
    fn forced_edge_and_conflicts() {
        let g = Graph::path(2);
        let c = Constraints {
            forced_initial: VertexSet::EMPTY,
            forced_edges: vec![(1, 0)],
        };
        let all: Vec<_> = enumerate_acyclic(&g, &c).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].directed_edges(), vec![(1, 0)]);
        let bad = Constraints {
            forced_initial: VertexSet::singleton(0),
            forced_edges: vec![(1, 0)],
        };
        assert!(matches!(enumerate_acyclic(&g, &bad), Err(Error::InconsistentConstraints(_))));
        let cyc = Constraints {
            forced_initial: VertexSet::EMPTY,
            forced_edges: vec![(0, 1), (1, 2), (2, 0)],
        };
        assert!(matches!(
            enumerate_acyclic(&Graph::complete(3), &cyc),
            Err(Error::InconsistentConstraints(_))
        ));
    }

    #[test]
    fn partition_matches_sequential() {
        let g = Graph::cycle(5);
        let it = enumerate_acyclic(&g, &Constraints::default()).unwrap();
        let parts: Vec<Orientation> = it.split(3).into_iter().flatten().collect();
        let seq: Vec<Orientation> = it.collect();
        assert_eq!(parts, seq);
        assert_eq!(seq.len(), 30);
    }

    #[test]
    fn objectives_on_small_cases() {
        let k4 = Graph::complete(4);
        let o = Orientation::from_order(&k4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(kalai_objective(&o), 15);
        let e = Orientation::from_order(&Graph::path(2), &[0, 1]).unwrap();
        assert_eq!(kalai_objective(&e), 3);
        let h = IndegreeHistogram {
            counts: vec![0, 0, 0, 7, 0],
        };
        assert_eq!(f_r_objective(&h, 4), 7);
        let h = IndegreeHistogram {
            counts: vec![0, 0, 0, 0, 0, 2],
        };
        assert_eq!(f_r_objective(&h, 5), 10);
    }

    #[test]
    fn initial_and_final_sets() {
        let g = Graph::path(3);
        let o = Orientation::from_order(&g, &[0, 1, 2]).unwrap();
        assert!(is_initial(&o, VertexSet::EMPTY));
        assert!(is_initial(&o, [0].iter().collect()));
        assert!(!is_initial(&o, [2].iter().collect()));
        assert!(is_final(&o, [2].iter().collect()));
    }
}
