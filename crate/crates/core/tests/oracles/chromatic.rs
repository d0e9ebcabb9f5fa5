//! Number of acyclic orientations as `|P(G, -1)|` (Stanley), with the
//! chromatic polynomial read off from partitions into independent sets.

/// `a[j]` = number of partitions of the vertex set into `j` nonempty independent sets.
fn independent_partitions(n: usize, edges: &[(usize, usize)]) -> Vec<i128> {
    let mut adj = vec![0u32; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let full = (1u32 << n) - 1;
    let independent: Vec<bool> = (0..=full)
        .map(|s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .collect();
    // ways[s][j]: partitions of s into j independent blocks, the block of the
    // lowest vertex chosen first.
    let mut ways = vec![vec![0i128; n + 1]; (full + 1) as usize];
    ways[0][0] = 1;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut sub = rest;
        loop {
            let block = sub | low;
            if independent[block as usize] {
                for j in 1..=n {
                    ways[s as usize][j] += ways[(s & !block) as usize][j - 1];
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    ways[full as usize].clone()
}

/// `|P(G, -1)|` where `P(G, x) = sum_j a_j x (x-1) .. (x-j+1)`.
pub fn acyclic_orientation_count(n: usize, edges: &[(usize, usize)]) -> u128 {
    let a = independent_partitions(n, edges);
    let mut total: i128 = 0;
    let mut falling: i128 = 1;
    for (j, &aj) in a.iter().enumerate() {
        if j > 0 {
            falling *= -1 - (j as i128 - 1);
        }
        total += aj * falling;
    }
    total.unsigned_abs()
}
