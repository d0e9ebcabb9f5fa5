use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::FaceLattice;
use crate::vertex_set::VertexSet;

/// Degree statistics of a `d`-polytope graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeStats {
    pub d: usize,
    /// `(f_0, .., f_{d-1})`, known only when computed from a lattice.
    pub f_vector: Option<Vec<usize>>,
    pub degrees: Vec<usize>,
    /// Excess degree: the sum of `deg v - d` over all vertices.
    pub xi: usize,
    pub nonsimple: VertexSet,
}

impl PolytopeStats {
    pub fn from_lattice(lattice: &FaceLattice) -> Result<Self> {
        let mut s = stats(&lattice.graph(), lattice.dim())?;
        s.f_vector = Some(lattice.f_vector());
        Ok(s)
    }

    pub fn num_nonsimple(&self) -> usize {
        self.nonsimple.len()
    }

    pub fn is_simple(&self, v: usize) -> bool {
        self.degrees[v] == self.d
    }

    pub fn simple_vertices(&self) -> VertexSet {
        VertexSet::full(self.degrees.len()) - self.nonsimple
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq = self.degrees.clone();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }
}

/// Degrees, excess and nonsimple vertices of `g` read as a `d`-polytope graph.
pub fn stats(g: &Graph, d: usize) -> Result<PolytopeStats> {
    let degrees = g.degrees();
    if let Some((vertex, &degree)) = degrees.iter().enumerate().find(|(_, &k)| k < d) {
        return Err(Error::DegreeTooLow { vertex, degree, d });
    }
    let xi = degrees.iter().map(|k| k - d).sum();
    let nonsimple = degrees
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > d)
        .map(|(v, _)| v)
        .collect();
    Ok(PolytopeStats {
        d,
        f_vector: None,
        degrees,
        xi,
        nonsimple,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn excess_of_complete_graph() {
        let s = stats(&Graph::complete(5), 4).unwrap();
        assert_eq!(s.xi, 0);
        assert!(s.nonsimple.is_empty());
        let s = stats(&Graph::complete(5), 3).unwrap();
        assert_eq!(s.xi, 5);
        assert_eq!(s.num_nonsimple(), 5);
    }

    #[test]
    fn low_degree_is_an_error() {
        assert!(matches!(
            stats(&Graph::cycle(5), 3),
            Err(Error::DegreeTooLow { degree: 2, .. })
        ));
    }
}
