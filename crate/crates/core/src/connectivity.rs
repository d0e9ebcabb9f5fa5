//! Vertex connectivity by unit-capacity max-flow (Menger).
//!
//! Every vertex `v` is split into `v_in = 2v` and `v_out = 2v + 1` joined by a
//! unit arc, so arc-disjoint flow paths are internally vertex-disjoint.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

struct SplitNetwork {
    size: usize,
    cap: Vec<i32>,
}

impl SplitNetwork {
    fn new(adj: &[VertexSet], within: VertexSet, s: usize, t: usize) -> Self {
        let size = 2 * adj.len();
        let mut cap = vec![0; size * size];
        let big = adj.len() as i32 + 1;
        for v in within {
            let through = if v == s || v == t { big } else { 1 };
            cap[(2 * v) * size + 2 * v + 1] = through;
            for w in adj[v] & within {
                cap[(2 * v + 1) * size + 2 * w] = 1;
            }
        }
        SplitNetwork { size, cap }
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut parent = vec![usize::MAX; self.size];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            let row = &self.cap[x * self.size..(x + 1) * self.size];
            for (y, &c) in row.iter().enumerate() {
                if c > 0 && parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return false;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            self.cap[x * self.size + y] -= 1;
            self.cap[y * self.size + x] += 1;
            y = x;
        }
        true
    }
}

/// Number of internally disjoint `s`-`t` paths inside `within`, capped at `limit`.
/// `s` and `t` must be distinct and nonadjacent.
pub fn local_connectivity(
    adj: &[VertexSet],
    within: VertexSet,
    s: usize,
    t: usize,
    limit: usize,
) -> usize {
    debug_assert!(s != t && !adj[s].contains(t));
    let mut net = SplitNetwork::new(adj, within, s, t);
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < limit && net.augment(source, sink) {
        flow += 1;
    }
    flow
}

/// Whether the subgraph induced by `within` is `k`-connected: it has more
/// than `k` vertices and no separating set of fewer than `k` vertices.
pub fn is_k_connected_within(adj: &[VertexSet], within: VertexSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if within.len() <= k {
        return false;
    }
    if !crate::graph::connected_within(adj, within) {
        return false;
    }
    if k == 1 {
        return true;
    }
    for s in within {
        // its neighbourhood would be a separator smaller than k
        if (adj[s] & within).len() < k {
            return false;
        }
    }
    for s in within {
        let far = within - adj[s];
        for t in far.iter().filter(|&t| t > s) {
            if local_connectivity(adj, within, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Vertex connectivity of the whole graph.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.num_vertices();
    let adj = g.adjacency();
    let all = g.vertices();
    let mut best = n.saturating_sub(1);
    for s in 0..n {
        for t in (all - adj[s]).iter().filter(|&t| t > s) {
            best = best.min(local_connectivity(adj, all, s, t, best));
        }
    }
    best
}

/// Balinski's condition for a `d`-polytope graph: the graph is `d`-connected.
pub fn balinski_check(g: &Graph, d: usize) -> bool {
    is_k_connected_within(g.adjacency(), g.vertices(), d)
}
