//! Face lattices built from vertex-facet incidences.
//!
//! Faces are the closure of the facet vertex sets under intersection, plus the
//! empty face and the whole polytope. The lower covers of a face `F` are the
//! maximal sets among `F ∩ J` for facets `J` not containing `F`; ranks follow
//! from the covers. Polytopality is checked through gradedness and the
//! diamond property.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::incidence::VertexFacetIncidence;
use crate::skeleton::Skeleton;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub struct FaceLattice {
    d: usize,
    n: usize,
    /// Sorted by (rank, bits). Index 0 is the empty face, the last index the whole polytope.
    faces: Vec<VertexSet>,
    ranks: Vec<i32>,
    lower_covers: Vec<Vec<usize>>,
    index: HashMap<VertexSet, usize>,
    facets: Vec<VertexSet>,
}

/// Builds and validates the face lattice of `vfi`.
pub fn build_lattice(vfi: &VertexFacetIncidence) -> Result<FaceLattice> {
    let d = vfi.dim();
    let n = vfi.num_vertices();
    let facets = vfi.facets().to_vec();
    let top = VertexSet::full(n);

    let mut seen: HashSet<VertexSet> = facets.iter().copied().collect();
    seen.insert(VertexSet::EMPTY);
    seen.insert(top);
    let mut work: Vec<VertexSet> = facets.clone();
    while let Some(f) = work.pop() {
        for &j in &facets {
            let g = f & j;
            if seen.insert(g) {
                work.push(g);
            }
        }
    }

    let mut by_size: Vec<VertexSet> = seen.into_iter().collect();
    by_size.sort_by_key(|s| (s.len(), s.bits()));

    let mut covers_of: HashMap<VertexSet, Vec<VertexSet>> = HashMap::new();
    let mut rank_of: HashMap<VertexSet, i32> = HashMap::new();
    rank_of.insert(VertexSet::EMPTY, -1);
    for &f in by_size.iter().skip(1) {
        let mut cands: Vec<VertexSet> = facets
            .iter()
            .filter(|j| !f.is_subset(**j))
            .map(|&j| f & j)
            .collect();
        cands.sort_unstable();
        cands.dedup();
        let maximal: Vec<VertexSet> = cands
            .iter()
            .copied()
            .filter(|&c| !cands.iter().any(|&o| o != c && c.is_subset(o)))
            .collect();
        let maximal = if maximal.is_empty() {
            vec![VertexSet::EMPTY]
        } else {
            maximal
        };
        let r = rank_of[&maximal[0]] + 1;
        if maximal.iter().any(|c| rank_of[c] + 1 != r) {
            return Err(Error::NotPolytopal(format!(
                "face {f} covers faces of different ranks"
            )));
        }
        rank_of.insert(f, r);
        covers_of.insert(f, maximal);
    }

    if rank_of[&top] != d as i32 {
        return Err(Error::NotPolytopal(format!(
            "lattice has rank {} but d = {d}",
            rank_of[&top] + 1
        )));
    }

    let mut faces = by_size;
    faces.sort_by_key(|s| (rank_of[s], s.bits()));
    let index: HashMap<VertexSet, usize> =
        faces.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let ranks: Vec<i32> = faces.iter().map(|s| rank_of[s]).collect();
    let lower_covers: Vec<Vec<usize>> = faces
        .iter()
        .map(|s| {
            let mut c: Vec<usize> = covers_of
                .get(s)
                .map(|v| v.iter().map(|x| index[x]).collect())
                .unwrap_or_default();
            c.sort_unstable();
            c
        })
        .collect();

    let atoms: Vec<VertexSet> = faces
        .iter()
        .zip(&ranks)
        .filter(|(_, &r)| r == 0)
        .map(|(&s, _)| s)
        .collect();
    if atoms.len() != n || atoms.iter().any(|a| a.len() != 1) {
        return Err(Error::NotPolytopal(
            "rank-0 faces are not exactly the vertices".into(),
        ));
    }

    let lattice = FaceLattice {
        d,
        n,
        faces,
        ranks,
        lower_covers,
        index,
        facets,
    };
    lattice.check_diamond()?;
    Ok(lattice)
}

impl FaceLattice {
    fn check_diamond(&self) -> Result<()> {
        let mut count = vec![0u32; self.faces.len()];
        for (top, covers) in self.lower_covers.iter().enumerate() {
            let mut touched = Vec::new();
            for &mid in covers {
                for &low in &self.lower_covers[mid] {
                    if count[low] == 0 {
                        touched.push(low);
                    }
                    count[low] += 1;
                }
            }
            for low in touched {
                if count[low] != 2 {
                    return Err(Error::NotPolytopal(format!(
                        "interval [{}, {}] has {} middle elements",
                        self.faces[low], self.faces[top], count[low]
                    )));
                }
                count[low] = 0;
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// Number of faces including the empty face and the polytope itself.
    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// All faces as `(rank, vertex set)`, ranks running from -1 to d.
    pub fn faces(&self) -> impl Iterator<Item = (i32, VertexSet)> + '_ {
        self.ranks.iter().copied().zip(self.faces.iter().copied())
    }

    pub fn faces_of_rank(&self, rank: i32) -> impl Iterator<Item = VertexSet> + '_ {
        self.faces().filter(move |&(r, _)| r == rank).map(|(_, s)| s)
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// `(f_0, .., f_{d-1})`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.d];
        for &r in &self.ranks {
            if r >= 0 && (r as usize) < self.d {
                f[r as usize] += 1;
            }
        }
        f
    }

    /// Hasse diagram edges as `(lower, upper)` face indices.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.lower_covers
            .iter()
            .enumerate()
            .flat_map(|(up, lows)| lows.iter().map(move |&low| (low, up)))
            .collect()
    }

    pub fn face(&self, index: usize) -> (i32, VertexSet) {
        (self.ranks[index], self.faces[index])
    }

    pub fn face_index(&self, set: VertexSet) -> Option<usize> {
        self.index.get(&set).copied()
    }

    /// Rank of `set` if it is a face.
    pub fn rank_of(&self, set: VertexSet) -> Option<i32> {
        self.face_index(set).map(|i| self.ranks[i])
    }

    /// The smallest face containing `set`: the intersection of all facets containing it.
    pub fn smallest_face_containing(&self, set: VertexSet) -> (i32, VertexSet) {
        let mut acc = VertexSet::full(self.n);
        for &f in &self.facets {
            if set.is_subset(f) {
                acc = acc & f;
            }
        }
        let i = self.index[&acc];
        (self.ranks[i], acc)
    }

    /// The 1-skeleton.
    pub fn graph(&self) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for e in self.faces_of_rank(1) {
            let mut it = e.iter();
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Graph::from_adjacency(adj)
    }

    /// Faces of rank `0..=k`.
    pub fn skeleton(&self, k: usize) -> Result<Skeleton> {
        if k + 1 > self.d {
            return Err(Error::RankOutOfRange {
                k,
                max: self.d.saturating_sub(1),
            });
        }
        let faces = self
            .faces()
            .filter(|&(r, _)| r >= 0 && r as usize <= k)
            .map(|(r, s)| (r as usize, s))
            .collect();
        Ok(Skeleton::new(k, self.n, faces))
    }
}

/// The graph of a polytope: its rank-1 faces.
pub fn graph_of(lattice: &FaceLattice) -> Graph {
    lattice.graph()
}

/// Faces of rank at most `k`.
pub fn k_skeleton(lattice: &FaceLattice, k: usize) -> Result<Skeleton> {
    lattice.skeleton(k)
}
