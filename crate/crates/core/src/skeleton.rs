use crate::error::{Error, Result};
use crate::iso::{self, ColoredGraph};
use crate::vertex_set::VertexSet;

/// The faces of a polytope of rank at most `k`, vertices included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    k: usize,
    n: usize,
    faces: Vec<(usize, VertexSet)>,
}

impl Skeleton {
    pub(crate) fn new(k: usize, n: usize, faces: Vec<(usize, VertexSet)>) -> Self {
        Skeleton { k, n, faces }
    }

    pub fn rank_bound(&self) -> usize {
        self.k
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// `(rank, vertex set)` pairs, ordered by rank.
    pub fn faces(&self) -> &[(usize, VertexSet)] {
        &self.faces
    }

    /// Every face of a listed face (among ranks 0..=k) is listed.
    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&(r, s)| {
            r == 0
                || self
                    .faces
                    .iter()
                    .filter(|&&(q, t)| q + 1 == r && t.is_subset(s))
                    .count()
                    >= 2
        })
    }

    /// Vertex-face containment graph with faces colored by rank.
    fn incidence_graph(&self) -> ColoredGraph {
        let higher: Vec<&(usize, VertexSet)> = self.faces.iter().filter(|(r, _)| *r > 0).collect();
        let size = self.n + higher.len();
        let mut g = ColoredGraph::new(size);
        for (i, &&(r, s)) in higher.iter().enumerate() {
            g.set_color(self.n + i, r as u64);
            for v in s {
                g.add_edge(v, self.n + i);
            }
        }
        g
    }
}

/// Whether some vertex bijection maps the faces of `a` onto the faces of `b`.
pub fn skeletons_isomorphic(a: &Skeleton, b: &Skeleton) -> Result<bool> {
    if a.k != b.k {
        return Err(Error::RankMismatch(a.k, b.k));
    }
    if a.n != b.n || a.faces.len() != b.faces.len() {
        return Ok(false);
    }
    Ok(iso::find_isomorphism(&a.incidence_graph(), &b.incidence_graph()).is_some())
}
