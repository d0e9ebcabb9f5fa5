//! Constructors and named fixtures.
//!
//! Labeling conventions are fixed so outputs are stable: constructed vertices
//! are appended after the vertices of the input, and facets come in the order
//! documented on each constructor.

mod derived;

use std::fmt;

use crate::error::{Error, Result};
use crate::incidence::VertexFacetIncidence;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

fn from_lists(d: usize, n: usize, facets: &[&[usize]]) -> VertexFacetIncidence {
    let sets = facets.iter().map(|f| f.iter().collect()).collect();
    VertexFacetIncidence::from_sets(d, n, sets).expect("catalogue data is valid")
}

fn check_dim(d: usize, min: usize) -> Result<()> {
    if d < min {
        return Err(Error::BadDimension {
            d,
            reason: "below the smallest dimension of this family",
        });
    }
    Ok(())
}

/// The `d`-simplex on `0..=d`; facet `i` omits vertex `i`.
pub fn simplex(d: usize) -> Result<VertexFacetIncidence> {
    check_dim(d, 2)?;
    if d + 1 > MAX_VERTICES {
        return Err(Error::BadDimension {
            d,
            reason: "too many vertices",
        });
    }
    let all = VertexSet::full(d + 1);
    Ok(VertexFacetIncidence::from_sets(d, d + 1, (0..=d).map(|i| all.without(i)).collect()).unwrap())
}

/// Prism over a `(d-1)`-simplex. Bottom vertices are `0..d`, top vertex `d + i`
/// sits over `i`. Facets: bottom, top, then the side facet omitting pair `i`.
pub fn simplicial_prism(d: usize) -> Result<VertexFacetIncidence> {
    check_dim(d, 2)?;
    if 2 * d > MAX_VERTICES {
        return Err(Error::BadDimension {
            d,
            reason: "too many vertices",
        });
    }
    let bottom = VertexSet::full(d);
    let top = VertexSet::full(2 * d) - bottom;
    let mut facets = vec![bottom, top];
    for i in 0..d {
        facets.push((bottom | top).without(i).without(d + i));
    }
    Ok(VertexFacetIncidence::from_sets(d, 2 * d, facets).unwrap())
}

/// The `m`-gon as a 2-polytope; edge `i` joins `i` and `i + 1`.
pub fn polygon(m: usize) -> Result<VertexFacetIncidence> {
    if !(3..=MAX_VERTICES).contains(&m) {
        return Err(Error::Degenerate(format!("a polygon needs 3..=64 vertices, got {m}")));
    }
    let facets = (0..m)
        .map(|i| VertexSet::singleton(i).with((i + 1) % m))
        .collect();
    Ok(VertexFacetIncidence::from_sets(2, m, facets).unwrap())
}

/// Pyramid with apex `n` over `base`. Facets: the base, then `F + apex` for
/// each base facet `F` in order.
pub fn pyramid_over(base: &VertexFacetIncidence) -> Result<VertexFacetIncidence> {
    let n = base.num_vertices();
    if n + 1 > MAX_VERTICES {
        return Err(Error::InvalidBase(format!("{n} base vertices leave no room for an apex")));
    }
    let mut facets = vec![base.vertices()];
    facets.extend(base.facets().iter().map(|f| f.with(n)));
    VertexFacetIncidence::from_sets(base.dim() + 1, n + 1, facets)
        .map_err(|e| Error::InvalidBase(e.to_string()))
}

/// `r`-fold pyramid; apexes are numbered in the order they are added.
pub fn pyramid_fold(base: &VertexFacetIncidence, r: usize) -> Result<VertexFacetIncidence> {
    let mut p = base.clone();
    for _ in 0..r {
        p = pyramid_over(&p)?;
    }
    Ok(p)
}

/// Prism over `base`: vertex `v + n` sits over `v`. Facets: bottom, top, then
/// `F x [0, 1]` for each base facet `F`.
pub fn prism_over(base: &VertexFacetIncidence) -> Result<VertexFacetIncidence> {
    let n = base.num_vertices();
    if 2 * n > MAX_VERTICES {
        return Err(Error::InvalidBase(format!("prism over {n} vertices is too large")));
    }
    let lift = |f: VertexSet| VertexSet::from_bits(f.bits() << n);
    let bottom = base.vertices();
    let mut facets = vec![bottom, lift(bottom)];
    facets.extend(base.facets().iter().map(|&f| f | lift(f)));
    VertexFacetIncidence::from_sets(base.dim() + 1, 2 * n, facets)
        .map_err(|e| Error::InvalidBase(e.to_string()))
}

/// The `d`-cube as iterated prisms over the square.
pub fn cube(d: usize) -> Result<VertexFacetIncidence> {
    check_dim(d, 2)?;
    if d > 6 {
        return Err(Error::BadDimension {
            d,
            reason: "too many vertices",
        });
    }
    let mut p = polygon(4)?;
    for _ in 2..d {
        p = prism_over(&p)?;
    }
    Ok(p)
}

fn bipyramid(d: usize) -> VertexFacetIncidence {
    let base = VertexSet::full(d);
    let mut facets = Vec::with_capacity(2 * d);
    for apex in [d, d + 1] {
        for i in 0..d {
            facets.push(base.without(i).with(apex));
        }
    }
    VertexFacetIncidence::from_sets(d, d + 2, facets).unwrap()
}

/// Bipyramid over a `(d-1)`-simplex on `0..d` with apexes `d` and `d + 1`.
/// Facets: `base - i + apex`, first for apex `d`, then for apex `d + 1`.
pub fn bipyramid_over_simplex(d: usize) -> Result<VertexFacetIncidence> {
    check_dim(d, 3)?;
    if d + 2 > MAX_VERTICES {
        return Err(Error::BadDimension {
            d,
            reason: "too many vertices",
        });
    }
    Ok(bipyramid(d))
}

/// Pyramid over a bipyramid over a `(d-2)`-simplex; the apex is vertex `d + 1`.
pub fn pyramid_over_bipyramid(d: usize) -> Result<VertexFacetIncidence> {
    check_dim(d, 3)?;
    if d + 2 > MAX_VERTICES {
        return Err(Error::BadDimension {
            d,
            reason: "too many vertices",
        });
    }
    pyramid_over(&bipyramid(d - 1))
}

/// Minkowski sum of a `d`-simplex with a segment parallel to a triangle of it
/// but to none of its edges, for `d` in `3..=5`.
pub fn pentasm(d: usize) -> Result<VertexFacetIncidence> {
    let data = match d {
        3 => derived::PENTASM_3,
        4 => derived::PENTASM_4,
        5 => derived::PENTASM_5,
        _ => {
            return Err(Error::BadDimension {
                d,
                reason: "pentasm data is available for d = 3, 4, 5",
            })
        }
    };
    Ok(from_lists(d, 2 * d + 1, data))
}

/// The 3-polytope with six vertices and six facets whose two nonsimple
/// vertices are `0` and `1`.
pub fn tetragonal_antiwedge() -> VertexFacetIncidence {
    from_lists(3, 6, derived::ANTIWEDGE)
}

/// The four 4-polytopes on seven vertices with degree sequence
/// (4,4,4,5,5,6,6), indexed `1..=4`, facets in published order.
pub fn table1(i: usize) -> Result<VertexFacetIncidence> {
    if !(1..=4).contains(&i) {
        return Err(Error::BadIndex(i));
    }
    Ok(from_lists(4, 7, derived::TABLE1[i - 1]))
}

/// The five 3-polytopes with seven vertices and at most two nonsimple vertices.
pub fn seven_vertex_3polytopes() -> Vec<VertexFacetIncidence> {
    derived::SEVEN_VERTEX
        .iter()
        .map(|facets| from_lists(3, 7, facets))
        .collect()
}

/// Where a fixture's incidence data comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    PaperTable,
    Constructor,
    DerivedOracle,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::PaperTable => "paper-table",
            Provenance::Constructor => "constructor",
            Provenance::DerivedOracle => "derived-oracle",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct FixtureRecord {
    pub name: String,
    pub vfi: VertexFacetIncidence,
    pub provenance: Provenance,
}

impl FixtureRecord {
    fn new(name: impl Into<String>, vfi: VertexFacetIncidence, provenance: Provenance) -> Self {
        FixtureRecord {
            name: name.into(),
            vfi,
            provenance,
        }
    }
}

/// Every named fixture, in a fixed order.
pub fn fixtures() -> Vec<FixtureRecord> {
    use Provenance::*;
    let mut out = Vec::new();
    for d in 2..=6 {
        out.push(FixtureRecord::new(format!("simplex-{d}"), simplex(d).unwrap(), Constructor));
    }
    for d in 2..=5 {
        out.push(FixtureRecord::new(format!("prism-{d}"), simplicial_prism(d).unwrap(), Constructor));
    }
    for m in [5, 6] {
        out.push(FixtureRecord::new(format!("polygon-{m}"), polygon(m).unwrap(), Constructor));
    }
    for d in 3..=4 {
        out.push(FixtureRecord::new(format!("cube-{d}"), cube(d).unwrap(), Constructor));
    }
    let bases = [
        ("pentagon", polygon(5).unwrap(), Constructor),
        ("prism-3", simplicial_prism(3).unwrap(), Constructor),
        ("antiwedge", tetragonal_antiwedge(), DerivedOracle),
    ];
    for (name, base, prov) in &bases {
        for r in 1..=3 {
            let p = pyramid_fold(base, r).unwrap();
            out.push(FixtureRecord::new(format!("pyramid-{r}-{name}"), p, *prov));
        }
    }
    for d in 3..=5 {
        let p = pyramid_fold(&polygon(4).unwrap(), d - 2).unwrap();
        out.push(FixtureRecord::new(format!("pyramid-{}-quadrilateral", d - 2), p, Constructor));
    }
    for d in 3..=5 {
        out.push(FixtureRecord::new(
            format!("bipyramid-{d}"),
            bipyramid_over_simplex(d).unwrap(),
            Constructor,
        ));
    }
    for d in 4..=5 {
        out.push(FixtureRecord::new(
            format!("pyramid-bipyramid-{d}"),
            pyramid_over_bipyramid(d).unwrap(),
            Constructor,
        ));
    }
    for d in 3..=5 {
        out.push(FixtureRecord::new(format!("pentasm-{d}"), pentasm(d).unwrap(), DerivedOracle));
    }
    out.push(FixtureRecord::new("antiwedge", tetragonal_antiwedge(), DerivedOracle));
    out.push(FixtureRecord::new(
        "pyramid-1-pentasm-3",
        pyramid_over(&pentasm(3).unwrap()).unwrap(),
        DerivedOracle,
    ));
    out.push(FixtureRecord::new(
        "prism-pentasm-4",
        prism_over(&pentasm(4).unwrap()).unwrap(),
        DerivedOracle,
    ));
    for (i, p) in seven_vertex_3polytopes().into_iter().enumerate() {
        out.push(FixtureRecord::new(format!("seven-vertex-{}", i + 1), p, DerivedOracle));
    }
    for i in 1..=4 {
        out.push(FixtureRecord::new(format!("table1-{i}"), table1(i).unwrap(), PaperTable));
    }
    out
}

/// Looks up a fixture by name.
pub fn fixture(name: &str) -> Option<FixtureRecord> {
    fixtures().into_iter().find(|f| f.name == name)
}
