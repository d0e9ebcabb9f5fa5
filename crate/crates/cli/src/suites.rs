//! Property checks over the fixture catalogue, grouped into named suites.

use std::fmt;

use polyrec_core::catalogue::{fixtures, pentasm, simplex, simplicial_prism, FixtureRecord};
use polyrec_core::orientation::feasible_sets;
use polyrec_core::structure::{
    is_prism_or_pyramid, nonsimple_core, pyramid_apex, pyramid_decompose, verify_basic_excess, PrismOrPyramid,
};
use polyrec_core::{
    are_equivalent, build_lattice, enumerate_acyclic, f_r_objective, in_a_r, indegree_histogram, is_good,
    is_good_at, is_initial, reconstruct, stats, Constraints, Goodness, Graph, Orientation, Outcome,
    VertexFacetIncidence, VertexSet,
};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// A summary when the check passes, witnesses when it fails.
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failures: Vec<String>, summary: String) -> Self {
        let passed = failures.is_empty();
        Check {
            name: name.into(),
            passed,
            detail: if passed { summary } else { failures.join("; ") },
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    BasicExcess,
    PyramidTheorems,
    ExcessTheorem,
    OrientationExistence,
    Claim1Minimum,
    Roundtrip,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::BasicExcess,
        Suite::PyramidTheorems,
        Suite::ExcessTheorem,
        Suite::OrientationExistence,
        Suite::Claim1Minimum,
        Suite::Roundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BasicExcess => "basic-excess",
            Suite::PyramidTheorems => "pyramid-theorems",
            Suite::ExcessTheorem => "excess-theorem",
            Suite::OrientationExistence => "orientation-existence",
            Suite::Claim1Minimum => "claim1-minimum",
            Suite::Roundtrip => "roundtrip",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn run(self) -> Vec<Check> {
        match self {
            Suite::BasicExcess => basic_excess(),
            Suite::PyramidTheorems => pyramid_theorems(),
            Suite::ExcessTheorem => vec![excess_values()],
            Suite::OrientationExistence => vec![
                good_orientations_with_initial_facets(8),
                redirection_on_small_fixtures(8),
                redirection_exhaustive(),
            ],
            Suite::Claim1Minimum => vec![claim1_minimum()],
            Suite::Roundtrip => vec![roundtrip()],
        }
    }
}

struct Fixture {
    name: String,
    vfi: VertexFacetIncidence,
    graph: Graph,
    d: usize,
    n: usize,
    nonsimple: VertexSet,
    xi: usize,
}

fn catalogue() -> Vec<Fixture> {
    fixtures()
        .into_iter()
        .map(|FixtureRecord { name, vfi, .. }| {
            let graph = build_lattice(&vfi).expect("catalogue fixtures are polytopal").graph();
            let d = vfi.dim();
            let s = stats(&graph, d).expect("fixture degrees are at least d");
            Fixture {
                name,
                n: vfi.num_vertices(),
                d,
                nonsimple: s.nonsimple,
                xi: s.xi,
                vfi,
                graph,
            }
        })
        .collect()
}

fn basic_excess() -> Vec<Check> {
    catalogue()
        .into_iter()
        .map(|fx| match verify_basic_excess(&fx.vfi) {
            Ok(report) => Check::new(
                format!("basic-excess {}", fx.name),
                Vec::new(),
                format!(
                    "{} non-ridge facet pairs, {} simple-in-facet witnesses",
                    report.non_ridge_pairs.len(),
                    report.simple_in_facet.len()
                ),
            ),
            Err(e) => Check::new(format!("basic-excess {}", fx.name), vec![e.to_string()], String::new()),
        })
        .collect()
}

/// Runs `test` on every fixture meeting `hypothesis`.
fn over_fixtures(
    name: &str,
    all: &[Fixture],
    hypothesis: impl Fn(&Fixture) -> bool,
    test: impl Fn(&Fixture) -> Result<(), String>,
) -> Check {
    let mut covered = 0;
    let mut failures = Vec::new();
    for fx in all.iter().filter(|fx| hypothesis(fx)) {
        covered += 1;
        if let Err(why) = test(fx) {
            failures.push(format!("{}: {why}", fx.name));
        }
    }
    Check::new(name, failures, format!("{covered} fixtures meet the hypothesis"))
}

fn pyramid_theorems() -> Vec<Check> {
    let all = catalogue();
    let k_of = |fx: &Fixture| fx.nonsimple.len();
    let mut checks = vec![
        over_fixtures(
            "pyramid or simple nonneighbours",
            &all,
            |fx| k_of(fx) < fx.d,
            |fx| {
                if pyramid_apex(&fx.vfi).is_some() {
                    return Ok(());
                }
                let simple = fx.graph.vertices() - fx.nonsimple;
                let allowed = fx.d - k_of(fx);
                for u in fx.nonsimple {
                    let count = (simple - fx.graph.neighbors(u)).len();
                    if count < allowed {
                        return Err(format!("vertex {u} has {count} < {allowed} simple nonneighbours"));
                    }
                }
                Ok(())
            },
        ),
        over_fixtures(
            "fewer than 2d vertices is a pyramid",
            &all,
            |fx| fx.n < 2 * fx.d && k_of(fx) < fx.d,
            |fx| pyramid_apex(&fx.vfi).map(|_| ()).ok_or_else(|| "no apex".into()),
        ),
        over_fixtures(
            "d+k vertices is a deep pyramid",
            &all,
            |fx| fx.n < 2 * fx.d && k_of(fx) < fx.d,
            |fx| {
                let k = fx.n - fx.d;
                let want = (fx.d - k).min(fx.d - 2);
                let fold = pyramid_decompose(&fx.vfi).fold();
                if fold >= want {
                    Ok(())
                } else {
                    Err(format!("fold {fold} < {want}"))
                }
            },
        ),
        over_fixtures(
            "2d vertices is a prism or a pyramid",
            &all,
            |fx| fx.n == 2 * fx.d && k_of(fx) + 2 <= fx.d,
            |fx| prism_or_pyramid(&fx.vfi),
        ),
        over_fixtures(
            "all-simple facet gives a prism or a pyramid",
            &all,
            |fx| fx.n <= 2 * fx.d && fx.vfi.facets().iter().any(|f| (*f & fx.nonsimple).is_empty()),
            |fx| prism_or_pyramid(&fx.vfi),
        ),
        over_fixtures(
            "no 4-polytope with 8 vertices and 17 edges",
            &all,
            |fx| fx.d == 4 && fx.n == 8,
            |fx| {
                if fx.graph.num_edges() == 17 {
                    Err("17 edges".into())
                } else {
                    Ok(())
                }
            },
        ),
    ];
    let lemma_failures: Vec<String> = all
        .iter()
        .filter_map(|fx| verify_basic_excess(&fx.vfi).err().map(|e| format!("{}: {e}", fx.name)))
        .collect();
    checks.push(Check::new(
        "nonsimple facet intersections",
        lemma_failures,
        format!("{} fixtures", all.len()),
    ));
    checks
}

fn prism_or_pyramid(vfi: &VertexFacetIncidence) -> Result<(), String> {
    match is_prism_or_pyramid(vfi) {
        PrismOrPyramid::Neither => Err("neither a prism nor a pyramid".into()),
        _ => Ok(()),
    }
}

fn excess_values() -> Check {
    let all = catalogue();
    let failures = all
        .iter()
        .filter(|fx| fx.xi != 0 && fx.xi + 2 < fx.d)
        .map(|fx| format!("{}: ξ={} with d={}", fx.name, fx.xi, fx.d))
        .collect();
    Check::new("excess is 0 or at least d-2", failures, format!("{} fixtures", all.len()))
}

fn small(all: Vec<Fixture>, max_vertices: usize) -> Vec<Fixture> {
    all.into_iter().filter(|fx| fx.n <= max_vertices).collect()
}

fn first_good_with_initial(fx: &Fixture, lattice: &polyrec_core::FaceLattice, facet: VertexSet) -> Option<Orientation> {
    enumerate_acyclic(&fx.graph, &Constraints::initial(facet))
        .expect("facet constraints are consistent")
        .find(|o| is_good(o, lattice).expect("same graph"))
}

pub fn good_orientations_with_initial_facets(max_vertices: usize) -> Check {
    let list = small(catalogue(), max_vertices);
    let failures: Vec<String> = list
        .par_iter()
        .flat_map_iter(|fx| {
            let lattice = build_lattice(&fx.vfi).unwrap();
            fx.vfi
                .facets()
                .iter()
                .filter(|&&f| first_good_with_initial(fx, &lattice, f).is_none())
                .map(|f| format!("{} facet {f}", fx.name))
                .collect::<Vec<_>>()
        })
        .collect();
    let facets: usize = list.iter().map(|fx| fx.vfi.num_facets()).sum();
    Check::new(
        "good orientation with each facet initial",
        failures,
        format!("{facets} facets of {} fixtures", list.len()),
    )
}

/// Orientations of `base` redirected inside facet `index` by every
/// orientation of the facet graph with a unique sink in each of its faces.
fn redirections(vfi: &VertexFacetIncidence, index: usize, base: &Orientation) -> Vec<Orientation> {
    let g = base.graph();
    let f = vfi.facets()[index];
    let (sub, map) = vfi.facet_polytope(index).expect("facets are polytopes");
    let sub_lattice = build_lattice(&sub).expect("facets are polytopal");
    let (inner, _) = g.induced(f);
    let outside: Vec<(usize, usize)> = base
        .directed_edges()
        .into_iter()
        .filter(|&(u, v)| !(f.contains(u) && f.contains(v)))
        .collect();
    enumerate_acyclic(&inner, &Constraints::default())
        .unwrap()
        .filter(|o| is_good_at(o, &sub_lattice, Goodness::AllFaces).unwrap())
        .map(|o| {
            let mut edges = outside.clone();
            edges.extend(o.directed_edges().into_iter().map(|(u, v)| (map[u], map[v])));
            let lifted = Orientation::new(g, &edges).expect("edges of the graph");
            base.redirected_within(&lifted, f).expect("initial facet keeps acyclicity")
        })
        .collect()
}

fn redirection_failures(fx: &Fixture, bases: impl Fn(usize, VertexSet) -> Vec<Orientation>) -> Vec<String> {
    let lattice = build_lattice(&fx.vfi).unwrap();
    let mut failures = Vec::new();
    for (i, &f) in fx.vfi.facets().iter().enumerate() {
        for base in bases(i, f) {
            if redirections(&fx.vfi, i, &base).iter().any(|o| !is_good(o, &lattice).unwrap()) {
                failures.push(format!("{} facet {f}", fx.name));
                break;
            }
        }
    }
    failures
}

pub fn redirection_on_small_fixtures(max_vertices: usize) -> Check {
    let list: Vec<Fixture> = small(catalogue(), max_vertices).into_iter().filter(|fx| fx.d >= 3).collect();
    let failures: Vec<String> = list
        .par_iter()
        .flat_map_iter(|fx| {
            let lattice = build_lattice(&fx.vfi).unwrap();
            redirection_failures(fx, |_, f| first_good_with_initial(fx, &lattice, f).into_iter().collect())
        })
        .collect();
    Check::new(
        "redirection inside an initial facet",
        failures,
        format!("{} fixtures, first good base per facet", list.len()),
    )
}

pub fn redirection_exhaustive() -> Check {
    let wanted = [simplicial_prism(3).unwrap(), simplex(4).unwrap()];
    let list: Vec<Fixture> = catalogue()
        .into_iter()
        .filter(|fx| wanted.iter().any(|w| w == &fx.vfi))
        .collect();
    let mut failures = Vec::new();
    let mut bases_checked = 0;
    for fx in &list {
        let lattice = build_lattice(&fx.vfi).unwrap();
        let all_bases = |_: usize, f: VertexSet| -> Vec<Orientation> {
            enumerate_acyclic(&fx.graph, &Constraints::initial(f))
                .unwrap()
                .filter(|o| is_good(o, &lattice).unwrap())
                .collect()
        };
        bases_checked += fx.vfi.facets().iter().enumerate().map(|(i, &f)| all_bases(i, f).len()).sum::<usize>();
        failures.extend(redirection_failures(fx, all_bases));
    }
    if list.len() != wanted.len() {
        failures.push("prism(3) or simplex(4) missing from the catalogue".into());
    }
    Check::new(
        "redirection for every good base (prism(3), simplex(4))",
        failures,
        format!("{bases_checked} good bases"),
    )
}

/// Result of the sink-count minimisation over orientations with the core initial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim1Report {
    pub minimum: u64,
    pub facets: usize,
    pub orientations: usize,
    pub minimisers: usize,
    /// Feasible sets containing the core that are initial with a unique simple
    /// sink in some minimising orientation.
    pub collected: Vec<VertexSet>,
    pub facets_with_core: Vec<VertexSet>,
}

pub fn claim1_report(d: usize) -> Claim1Report {
    let p = pentasm(d).unwrap();
    let g = build_lattice(&p).unwrap().graph();
    let core = nonsimple_core(&g, d).unwrap().vertices;
    let candidates = feasible_sets(&g, d, core, VertexSet::EMPTY);
    let parts = enumerate_acyclic(&g, &Constraints::initial(core)).unwrap().split(8);
    // (minimum, orientations in the class, minimisers, collected sets)
    let merged = parts
        .into_par_iter()
        .map(|part| {
            let mut best = (u64::MAX, 0usize, 0usize, Vec::<VertexSet>::new());
            for o in part {
                if in_a_r(&o, d, core).unwrap().is_none() {
                    continue;
                }
                best.1 += 1;
                let value = f_r_objective(&indegree_histogram(&o, d), d);
                if value > best.0 {
                    continue;
                }
                if value < best.0 {
                    best = (value, best.1, 0, Vec::new());
                }
                best.2 += 1;
                for &h in &candidates {
                    let sinks = o.sinks_within(h);
                    let simple_sink = sinks.len() == 1 && g.degree(sinks.first().unwrap()) == d;
                    if simple_sink && is_initial(&o, h) && !best.3.contains(&h) {
                        best.3.push(h);
                    }
                }
            }
            best
        })
        .reduce(
            || (u64::MAX, 0, 0, Vec::new()),
            |a, b| {
                let count = a.1 + b.1;
                match a.0.cmp(&b.0) {
                    std::cmp::Ordering::Less => (a.0, count, a.2, a.3),
                    std::cmp::Ordering::Greater => (b.0, count, b.2, b.3),
                    std::cmp::Ordering::Equal => {
                        let mut sets = a.3;
                        sets.extend(b.3.into_iter().filter(|h| !sets.contains(h)).collect::<Vec<_>>());
                        (a.0, count, a.2 + b.2, sets)
                    }
                }
            },
        );
    let mut collected = merged.3;
    collected.sort_by_key(|s| (s.len(), s.bits()));
    let mut facets_with_core: Vec<VertexSet> = p.facets().iter().copied().filter(|f| core.is_subset(*f)).collect();
    facets_with_core.sort_by_key(|s| (s.len(), s.bits()));
    Claim1Report {
        minimum: merged.0,
        facets: p.num_facets(),
        orientations: merged.1,
        minimisers: merged.2,
        collected,
        facets_with_core,
    }
}

fn claim1_minimum() -> Check {
    let r = claim1_report(4);
    let mut failures = Vec::new();
    if r.minimum != r.facets as u64 {
        failures.push(format!("minimum {} differs from the facet count {}", r.minimum, r.facets));
    }
    if r.collected != r.facets_with_core {
        let show = |v: &[VertexSet]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ");
        failures.push(format!(
            "collected [{}] but the facets containing the core are [{}]",
            show(&r.collected),
            show(&r.facets_with_core)
        ));
    }
    Check::new(
        "sink-count minimum on pentasm(4)",
        failures,
        format!(
            "minimum {} = facet count over {} orientations ({} minimisers); {} facets contain the core",
            r.minimum,
            r.orientations,
            r.minimisers,
            r.facets_with_core.len()
        ),
    )
}

fn roundtrip() -> Check {
    let all = catalogue();
    let outcomes: Vec<(String, Result<bool, String>)> = all
        .par_iter()
        .map(|fx| {
            let verdict = match reconstruct(&fx.graph, fx.d) {
                Ok(Outcome::Reconstructed(r)) => {
                    let back = r.incidence(fx.d, fx.n);
                    if are_equivalent(&back, &fx.vfi).is_some() && r.certificate.all_passed() {
                        Ok(true)
                    } else {
                        Err("reconstruction is not equivalent to the source".into())
                    }
                }
                Ok(Outcome::NotCovered(v)) if fx.xi >= fx.d && !v.covered => Ok(false),
                Ok(Outcome::NotCovered(v)) => Err(format!("refused a covered graph: {}", v.reason)),
                Err(e) => Err(e.to_string()),
            };
            (fx.name.clone(), verdict)
        })
        .collect();
    let rebuilt = outcomes.iter().filter(|(_, v)| v == &Ok(true)).count();
    let refused = outcomes.iter().filter(|(_, v)| v == &Ok(false)).count();
    let failures = outcomes
        .into_iter()
        .filter_map(|(name, v)| v.err().map(|e| format!("{name}: {e}")))
        .collect();
    Check::new(
        "graph round trip",
        failures,
        format!("{rebuilt} fixtures rebuilt, {refused} refused with excess at least d"),
    )
}
