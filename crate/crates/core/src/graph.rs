use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if adj[u].contains(v) {
                return Err(Error::InvalidGraph(format!("repeated edge ({u}, {v})")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from symmetric adjacency sets without re-validating.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, a)| !a.contains(u) && a.iter().all(|v| adj[v].contains(u))));
        Graph { adj }
    }

    pub fn complete(n: usize) -> Self {
        let full = VertexSet::full(n);
        Graph::from_adjacency((0..n).map(|v| full.without(v)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle graph")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path graph")
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.adj.len())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.len()).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (u, a) in self.adj.iter().enumerate() {
            for v in a.iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Whether `set` spans a complete subgraph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        let n = self.adj.len();
        (0..n).filter(|&v| self.adj[v].len() + 1 == n).collect()
    }

    /// Whether the subgraph induced by `within` is connected (true for the empty set).
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        connected_within(&self.adj, within)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// The subgraph induced by `subset`, relabeled to `0..|subset|` in
    /// increasing order, with the map from new to old indices.
    pub fn induced(&self, subset: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = subset.to_vec();
        let mut inverse = vec![usize::MAX; self.adj.len()];
        for (i, &v) in map.iter().enumerate() {
            inverse[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & subset).iter().map(|w| inverse[w]).collect())
            .collect();
        (Graph::from_adjacency(adj), map)
    }

    /// The graph with vertex `v` deleted; remaining vertices keep their order.
    pub fn remove_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        self.induced(self.vertices().without(v))
    }

    /// Applies `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.adj.len()];
        for (u, a) in self.adj.iter().enumerate() {
            adj[perm[u]] = a.map(perm);
        }
        Graph::from_adjacency(adj)
    }
}

pub(crate) fn connected_within(adj: &[VertexSet], within: VertexSet) -> bool {
    let Some(start) = within.first() else {
        return true;
    };
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next | (adj[v] & within);
        }
        frontier = next - seen;
        seen = seen | frontier;
    }
    seen == within
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.adj.len())
            .field("edges", &self.edges())
            .finish()
    }
}
