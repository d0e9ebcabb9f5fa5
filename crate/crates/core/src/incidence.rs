use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A combinatorial polytope given by its dimension and the vertex sets of its facets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexFacetIncidence {
    d: usize,
    n: usize,
    facets: Vec<VertexSet>,
}

impl VertexFacetIncidence {
    pub fn new(d: usize, n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidIncidence(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut sets = Vec::with_capacity(facets.len());
        for (i, f) in facets.iter().enumerate() {
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidIncidence(format!(
                    "facet {i} mentions vertex {v} >= n = {n}"
                )));
            }
            let set: VertexSet = f.iter().collect();
            if set.len() != f.len() {
                return Err(Error::InvalidIncidence(format!("facet {i} repeats a vertex")));
            }
            sets.push(set);
        }
        Self::from_sets(d, n, sets)
    }

    /// Checks the incidence invariants: facets pairwise non-nested, every facet
    /// has at least `d` vertices, every vertex lies in at least `d` facets.
    pub fn from_sets(d: usize, n: usize, facets: Vec<VertexSet>) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadDimension {
                d,
                reason: "dimension must be at least 2",
            });
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidIncidence(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        if n < d + 1 {
            return Err(Error::Degenerate(format!(
                "{n} vertices cannot span dimension {d}"
            )));
        }
        if facets.len() < d + 1 {
            return Err(Error::Degenerate(format!(
                "{} facets cannot bound a {d}-polytope",
                facets.len()
            )));
        }
        let all = VertexSet::full(n);
        for (i, &f) in facets.iter().enumerate() {
            if !f.is_subset(all) {
                return Err(Error::InvalidIncidence(format!("facet {i} is out of range")));
            }
            if f.len() < d {
                return Err(Error::InvalidIncidence(format!(
                    "facet {i} has {} < {d} vertices",
                    f.len()
                )));
            }
            for (j, &g) in facets.iter().enumerate() {
                if i != j && f.is_subset(g) {
                    return Err(Error::InvalidIncidence(format!(
                        "facet {i} {f} is contained in facet {j} {g}"
                    )));
                }
            }
        }
        for v in 0..n {
            let count = facets.iter().filter(|f| f.contains(v)).count();
            if count < d {
                return Err(Error::InvalidIncidence(format!(
                    "vertex {v} lies in {count} < {d} facets"
                )));
            }
        }
        Ok(VertexFacetIncidence { d, n, facets })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Facets as sorted vertex lists, sorted lexicographically.
    pub fn canonical_facets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.facets.iter().map(|f| f.to_vec()).collect();
        out.sort();
        out
    }

    /// Same polytope with facets in canonical order.
    pub fn canonicalized(&self) -> Self {
        let facets = self
            .canonical_facets()
            .iter()
            .map(|f| f.iter().collect())
            .collect();
        VertexFacetIncidence {
            d: self.d,
            n: self.n,
            facets,
        }
    }

    /// Number of facets containing `v`.
    pub fn facet_degree(&self, v: usize) -> usize {
        self.facets.iter().filter(|f| f.contains(v)).count()
    }

    /// Applies `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        VertexFacetIncidence {
            d: self.d,
            n: self.n,
            facets: self.facets.iter().map(|f| f.map(perm)).collect(),
        }
    }

    /// The facet `index` as a `(d-1)`-polytope on its own vertices (relabeled
    /// in increasing order), together with the map from new to old indices.
    /// Its facets are the maximal intersections with the other facets.
    pub fn facet_polytope(&self, index: usize) -> Result<(VertexFacetIncidence, Vec<usize>)> {
        let f = self.facets[index];
        let meets: Vec<VertexSet> = self
            .facets
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != index)
            .map(|(_, &g)| g & f)
            .filter(|s| !s.is_empty())
            .collect();
        let mut ridges: Vec<VertexSet> = Vec::new();
        for &s in &meets {
            let dominated = meets.iter().any(|&t| s != t && s.is_subset(t));
            if !dominated && !ridges.contains(&s) {
                ridges.push(s);
            }
        }
        let map = f.to_vec();
        let mut inverse = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inverse[v] = i;
        }
        let ridges = ridges.into_iter().map(|r| r.map(&inverse)).collect();
        let sub = VertexFacetIncidence::from_sets(self.d - 1, map.len(), ridges)?;
        Ok((sub, map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nested_and_degenerate() {
        let nested = VertexFacetIncidence::new(2, 3, &[vec![0, 1], vec![0, 1, 2], vec![1, 2]]);
        assert!(matches!(nested, Err(Error::InvalidIncidence(_))));
        let tiny = VertexFacetIncidence::new(3, 3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert!(matches!(tiny, Err(Error::Degenerate(_))));
        let few = VertexFacetIncidence::new(2, 4, &[vec![0, 1], vec![2, 3]]);
        assert!(matches!(few, Err(Error::Degenerate(_))));
        let out = VertexFacetIncidence::new(2, 3, &[vec![0, 1], vec![1, 2], vec![0, 3]]);
        assert!(matches!(out, Err(Error::InvalidIncidence(_))));
    }

    #[test]
    fn facet_of_a_tetrahedron_is_a_triangle() {
        let tet = VertexFacetIncidence::new(
            3,
            4,
            &[vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]],
        )
        .unwrap();
        let (tri, map) = tet.facet_polytope(0).unwrap();
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(tri.dim(), 2);
        assert_eq!(tri.canonical_facets(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }
}
