//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails or overruns its time limit.

#[path = "../../core/tests/oracles/chromatic.rs"]
mod chromatic;

use std::time::{Duration, Instant};

use polyrec_cli::formats::{parse_input, IncidenceFile, InputFile};
use polyrec_cli::suites::{
    claim1_report, good_orientations_with_initial_facets, redirection_exhaustive, Check, Suite,
};
use polyrec_core::catalogue::*;
use polyrec_core::{
    are_equivalent, build_lattice, enumerate_acyclic, graphs_isomorphic, reconstruct, skeletons_isomorphic, stats,
    Constraints, Graph, Outcome, VertexFacetIncidence,
};
use rayon::prelude::*;

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn graph(p: &VertexFacetIncidence) -> Graph {
    build_lattice(p).unwrap().graph()
}

fn checks_pass(checks: &[Check]) -> Verdict {
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
    if failed.is_empty() {
        Ok(format!("{} checks", checks.len()))
    } else {
        Err(failed.join("; "))
    }
}

fn table1_ambiguity() -> Verdict {
    let mut ps = Vec::new();
    for i in 1..=4 {
        let text = IncidenceFile::from_incidence(&table1(i).unwrap()).to_canonical_json();
        let InputFile::Incidence(file) = parse_input(&text).map_err(|e| e.to_string())? else {
            return Err("parsed as a graph file".into());
        };
        ps.push(file.to_incidence().map_err(|e| e.to_string())?);
    }
    let graphs: Vec<Graph> = ps
        .iter()
        .map(|p| build_lattice(p).map(|l| l.graph()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let counts: Vec<usize> = ps.iter().map(|p| p.num_facets()).collect();
    ensure(counts == [9, 8, 8, 7], format!("facet counts {counts:?}"))?;
    for g in &graphs {
        let degrees = stats(g, 4).unwrap().degree_sequence();
        ensure(degrees == [6, 6, 5, 5, 4, 4, 4], format!("degree sequence {degrees:?}"))?;
    }
    for i in 0..4 {
        for j in i + 1..4 {
            ensure(graphs_isomorphic(&graphs[i], &graphs[j]).is_some(), format!("graphs {i},{j} differ"))?;
            ensure(are_equivalent(&ps[i], &ps[j]).is_none(), format!("lattices {i},{j} agree"))?;
        }
    }
    Ok("facets 9/8/8/7, one graph, four lattices".into())
}

fn skeleton_pair() -> Verdict {
    let pair = |d: usize| (bipyramid_over_simplex(d).unwrap(), pyramid_over_bipyramid(d).unwrap());
    let (a4, b4) = pair(4);
    ensure(graphs_isomorphic(&graph(&a4), &graph(&b4)).is_some(), "d=4 graphs differ")?;
    let (a5, b5) = pair(5);
    let (la, lb) = (build_lattice(&a5).unwrap(), build_lattice(&b5).unwrap());
    let same = |k: usize| skeletons_isomorphic(&la.skeleton(k).unwrap(), &lb.skeleton(k).unwrap()).unwrap();
    ensure(same(2), "d=5 2-skeletons differ")?;
    ensure(!same(3), "d=5 3-skeletons agree")?;
    for (d, p) in [(4, &a4), (4, &b4), (5, &a5), (5, &b5)] {
        let g = graph(p);
        let xi = stats(&g, d).unwrap().xi;
        ensure(xi == d, format!("ξ={xi} for d={d}"))?;
        match reconstruct(&g, d).map_err(|e| e.to_string())? {
            Outcome::NotCovered(v) => ensure(!v.covered && v.reason.starts_with("excess = d"), v.reason)?,
            Outcome::Reconstructed(_) => return Err(format!("d={d} graph was reconstructed")),
        }
    }
    Ok("isomorphic graphs (d=4) and 2-skeletons (d=5), 3-skeletons differ, all refused".into())
}

fn round_trips() -> Verdict {
    let mut cases: Vec<(String, VertexFacetIncidence)> = Vec::new();
    for d in 3..=6 {
        cases.push((format!("simplex({d})"), simplex(d).unwrap()));
    }
    for d in 3..=5 {
        cases.push((format!("prism({d})"), simplicial_prism(d).unwrap()));
    }
    for r in 1..=3 {
        cases.push((format!("{r}-fold pyramid over pentagon"), pyramid_fold(&polygon(5).unwrap(), r).unwrap()));
        cases.push((format!("{r}-fold pyramid over prism(3)"), pyramid_fold(&simplicial_prism(3).unwrap(), r).unwrap()));
        cases.push((format!("{r}-fold pyramid over antiwedge"), pyramid_fold(&tetragonal_antiwedge(), r).unwrap()));
    }
    cases.push(("cube(3)".into(), cube(3).unwrap()));
    cases.push(("pentasm(4)".into(), pentasm(4).unwrap()));
    let limit = Duration::from_secs(300);
    let mut slowest = Duration::ZERO;
    for (name, p) in &cases {
        let start = Instant::now();
        let out = reconstruct(&graph(p), p.dim()).map_err(|e| format!("{name}: {e}"))?;
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure(elapsed < limit, format!("{name} took {elapsed:?}"))?;
        let r = out.result().ok_or_else(|| format!("{name} was refused"))?;
        let back = r.incidence(p.dim(), p.num_vertices());
        ensure(are_equivalent(&back, p).is_some(), format!("{name} is not equivalent"))?;
    }
    Ok(format!("{} polytopes, slowest {slowest:.2?}", cases.len()))
}

fn claim1() -> Verdict {
    let r = claim1_report(4);
    ensure(r.minimum == r.facets as u64, format!("minimum {} vs {} facets", r.minimum, r.facets))?;
    ensure(r.collected == r.facets_with_core, "collected sets differ from the facets containing K")?;
    Ok(format!(
        "min f_R = {} = facet count; {} unique-sink sets = facets containing K",
        r.minimum,
        r.collected.len()
    ))
}

fn excess_values() -> Verdict {
    let all = fixtures();
    for rec in &all {
        let d = rec.vfi.dim();
        let xi = stats(&graph(&rec.vfi), d).unwrap().xi;
        ensure(xi == 0 || xi + 2 >= d, format!("{}: ξ={xi}, d={d}", rec.name))?;
    }
    Ok(format!("{} fixtures", all.len()))
}

fn structure_suite() -> Verdict {
    let mut checks = Suite::PyramidTheorems.run();
    checks.extend(Suite::BasicExcess.run());
    checks_pass(&checks)
}

fn orientation_machinery() -> Verdict {
    let small: Vec<_> = fixtures().into_iter().filter(|r| r.vfi.num_vertices() <= 9).collect();
    let mismatches: Vec<String> = small
        .par_iter()
        .filter_map(|rec| {
            let g = graph(&rec.vfi);
            let expected = chromatic::acyclic_orientation_count(g.num_vertices(), &g.edges());
            let parts = enumerate_acyclic(&g, &Constraints::default()).unwrap().split(6);
            let got: usize = parts.into_par_iter().map(|p| p.count()).sum();
            (got as u128 != expected).then(|| format!("{}: {got} vs {expected}", rec.name))
        })
        .collect();
    ensure(mismatches.is_empty(), mismatches.join("; "))?;
    checks_pass(&[good_orientations_with_initial_facets(8), redirection_exhaustive()])
        .map(|s| format!("{} counts match the chromatic oracle; {s}", small.len()))
}

fn refusal() -> Verdict {
    let t = graph(&table1(1).unwrap());
    match reconstruct(&t, 4).map_err(|e| e.to_string())? {
        Outcome::NotCovered(v) => ensure(!v.covered && v.reason.contains("nonsimple count ≥ d"), v.reason)?,
        Outcome::Reconstructed(_) => return Err("table1 graph was reconstructed".into()),
    }
    let b = graph(&bipyramid_over_simplex(4).unwrap());
    match reconstruct(&b, 4).map_err(|e| e.to_string())? {
        Outcome::NotCovered(v) => ensure(!v.covered && v.reason.starts_with("excess = d"), v.reason)?,
        Outcome::Reconstructed(_) => return Err("bipyramid graph was reconstructed".into()),
    }
    Ok("both graphs refused with the hypothesis that fails".into())
}

fn main() {
    let criteria: [(&str, u64, fn() -> Verdict); 8] = [
        ("table1 ambiguity", 10, table1_ambiguity),
        ("skeleton ambiguity pair", 30, skeleton_pair),
        ("round-trip reconstruction", 3000, round_trips),
        ("sink-count minimum on pentasm(4)", 600, claim1),
        ("excess values", 10, excess_values),
        ("pyramid and prism theorems", 60, structure_suite),
        ("orientation machinery", 600, orientation_machinery),
        ("refusal correctness", 10, refusal),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(msg) if elapsed > Duration::from_secs(*limit) => Err(format!("{msg}; took {elapsed:.2?} > {limit}s")),
            v => v,
        };
        match verdict {
            Ok(msg) => println!("criterion {}: PASS {name} ({elapsed:.2?}): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
