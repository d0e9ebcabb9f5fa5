//! Brute-force enumeration of 3-polytope graphs on few vertices.
//!
//! A graph is taken to be the graph of a 3-polytope when it is 3-connected and
//! its induced nonseparating cycles cover every edge exactly twice with
//! `V - E + F = 2`; those cycles are then the facets.

pub type Edges = Vec<(usize, usize)>;

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn connected(adj: &[u64], within: u64) -> bool {
    if within == 0 {
        return true;
    }
    let mut seen = within & within.wrapping_neg();
    loop {
        let mut next = seen;
        for v in 0..adj.len() {
            if seen >> v & 1 == 1 {
                next |= adj[v] & within;
            }
        }
        if next == seen {
            return seen == within;
        }
        seen = next;
    }
}

/// 3-connected: more than three vertices and no removal of two vertices disconnects.
pub fn three_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let adj = adjacency(n, edges);
    let all = (1u64 << n) - 1;
    if n < 4 || !connected(&adj, all) {
        return false;
    }
    for a in 0..n {
        for b in a + 1..n {
            if !connected(&adj, all & !(1 << a) & !(1 << b)) {
                return false;
            }
        }
    }
    true
}

/// Vertex sets of induced cycles whose removal leaves the graph connected.
pub fn peripheral_cycles(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let adj = adjacency(n, edges);
    let all = (1u64 << n) - 1;
    let mut out = Vec::new();
    for s in 1..=all {
        if s.count_ones() < 3 {
            continue;
        }
        let two_regular = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .all(|v| (adj[v] & s).count_ones() == 2);
        if two_regular && connected(&adj, s) && connected(&adj, all & !s) {
            out.push(s);
        }
    }
    out
}

/// Facets of the 3-polytope with this graph, or `None` if the graph is not polytopal.
pub fn polyhedron_facets(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    if !three_connected(n, edges) {
        return None;
    }
    let cycles = peripheral_cycles(n, edges);
    for &(u, v) in edges {
        let mask = 1u64 << u | 1u64 << v;
        if cycles.iter().filter(|&&c| c & mask == mask).count() != 2 {
            return None;
        }
    }
    if n + cycles.len() != edges.len() + 2 {
        return None;
    }
    let mut facets: Vec<Vec<usize>> = cycles
        .iter()
        .map(|&c| (0..n).filter(|&v| c >> v & 1 == 1).collect())
        .collect();
    facets.sort();
    Some(facets)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// The relabeling of `edges` whose sorted edge list is lexicographically smallest.
pub fn canonical_form(_n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Edges {
    perms
        .iter()
        .map(|p| {
            let mut e: Edges = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort();
            e
        })
        .min()
        .unwrap()
}

/// All 3-polytope graphs on `n` vertices whose vertices `2..n` have degree 3,
/// up to isomorphism, in canonical labeling.
pub fn polyhedra_with_two_free_vertices(n: usize) -> Vec<(Edges, Vec<Vec<usize>>)> {
    let pairs = pair_index(n);
    let perms = permutations(n);
    let mut found: Vec<Edges> = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Edges = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let mut deg = vec![0; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg[0] < 3 || deg[1] < 3 || deg[2..].iter().any(|&k| k != 3) {
            continue;
        }
        if polyhedron_facets(n, &edges).is_none() {
            continue;
        }
        let canon = canonical_form(n, &edges, &perms);
        if !found.contains(&canon) {
            found.push(canon);
        }
    }
    found.sort_by_key(|e| (e.len(), e.clone()));
    found
        .into_iter()
        .map(|e| {
            let facets = polyhedron_facets(n, &e).unwrap();
            (e, facets)
        })
        .collect()
}
