mod oracles;

use oracles::chromatic::acyclic_orientation_count;
use polyrec_core::catalogue::{fixtures, FixtureRecord};
use polyrec_core::orientation::feasible_sets;
use polyrec_core::*;
use proptest::prelude::*;
use proptest::sample::select;

fn graph(p: &VertexFacetIncidence) -> Graph {
    build_lattice(p).unwrap().graph()
}

fn small_fixture(max_vertices: usize) -> impl Strategy<Value = FixtureRecord> {
    let list: Vec<FixtureRecord> = fixtures()
        .into_iter()
        .filter(|r| r.vfi.num_vertices() <= max_vertices)
        .collect();
    select(list)
}

fn with_permutation(max_vertices: usize) -> impl Strategy<Value = (FixtureRecord, Vec<usize>)> {
    small_fixture(max_vertices).prop_flat_map(|rec| {
        let n = rec.vfi.num_vertices();
        (Just(rec), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn equivalence_and_isomorphism_survive_relabeling((rec, perm) in with_permutation(16)) {
        let q = rec.vfi.relabel(&perm);
        let map = are_equivalent(&rec.vfi, &q);
        prop_assert!(map.is_some());
        let map = map.unwrap();
        prop_assert_eq!(rec.vfi.relabel(&map).canonical_facets(), q.canonical_facets());
        let (g, h) = (graph(&rec.vfi), graph(&q));
        prop_assert_eq!(&g.relabel(&perm), &h);
        let iso = graphs_isomorphic(&g, &h).unwrap();
        prop_assert_eq!(&g.relabel(&iso), &h);
        let a = build_lattice(&rec.vfi).unwrap();
        let b = build_lattice(&q).unwrap();
        prop_assert_eq!(a.f_vector(), b.f_vector());
        for k in 0..rec.vfi.dim() {
            prop_assert!(skeletons_isomorphic(&a.skeleton(k).unwrap(), &b.skeleton(k).unwrap()).unwrap());
        }
    }

    #[test]
    fn reconstruction_commutes_with_relabeling((rec, perm) in with_permutation(12)) {
        let d = rec.vfi.dim();
        let g = graph(&rec.vfi);
        let h = g.relabel(&perm);
        let a = reconstruct(&g, d).unwrap();
        let b = reconstruct(&h, d).unwrap();
        match (a, b) {
            (Outcome::Reconstructed(x), Outcome::Reconstructed(y)) => {
                let moved = x.incidence(d, g.num_vertices()).relabel(&perm);
                prop_assert_eq!(moved.canonical_facets(), y.incidence(d, h.num_vertices()).canonical_facets());
            }
            (Outcome::NotCovered(x), Outcome::NotCovered(y)) => prop_assert_eq!(x, y),
            (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
        }
    }

    #[test]
    fn split_enumeration_matches_sequential(g in random_graph(7), depth in 0usize..6) {
        let it = enumerate_acyclic(&g, &Constraints::default()).unwrap();
        let parts: Vec<Orientation> = it.split(depth).into_iter().flatten().collect();
        let seq: Vec<Orientation> = it.collect();
        prop_assert_eq!(parts, seq);
    }

    #[test]
    fn enumeration_count_is_the_chromatic_value(g in random_graph(7)) {
        let count = enumerate_acyclic(&g, &Constraints::default()).unwrap().count();
        prop_assert_eq!(count as u128, acyclic_orientation_count(g.num_vertices(), &g.edges()));
    }

    #[test]
    fn constrained_enumeration_is_the_filtered_enumeration(g in random_graph(6), bits in any::<u64>()) {
        let initial = VertexSet::from_bits(bits) & g.vertices();
        let constrained: Vec<Orientation> = enumerate_acyclic(&g, &Constraints::initial(initial)).unwrap().collect();
        let filtered: Vec<Orientation> = enumerate_acyclic(&g, &Constraints::default())
            .unwrap()
            .filter(|o| is_initial(o, initial))
            .collect();
        prop_assert_eq!(constrained.len(), filtered.len());
        for o in &constrained {
            prop_assert!(filtered.contains(o));
        }
    }

    #[test]
    fn feasible_sets_match_brute_force(g in random_graph(9), d in 2usize..5, req in any::<u64>(), forb in any::<u64>()) {
        let all = g.vertices();
        let required = VertexSet::from_bits(req & forb.rotate_left(7) & req.rotate_left(13)) & all;
        let forbidden = (VertexSet::from_bits(forb & forb.rotate_left(5)) & all) - required;
        let got = feasible_sets(&g, d, required, forbidden);
        let mut want: Vec<VertexSet> = (1..1u64 << g.num_vertices())
            .map(VertexSet::from_bits)
            .filter(|&s| required.is_subset(s) && (s & forbidden).is_empty() && is_feasible(&g, d, s))
            .collect();
        want.sort_by_key(|s| (s.len(), s.bits()));
        prop_assert_eq!(got, want);
    }

    #[test]
    fn returned_reconstructions_are_always_certified(g in random_graph(8), d in 2usize..5) {
        match reconstruct(&g, d) {
            Ok(Outcome::Reconstructed(r)) => {
                prop_assert!(r.certificate.all_passed());
                let lat = build_lattice(&r.incidence(d, g.num_vertices())).unwrap();
                prop_assert_eq!(lat.graph(), g);
            }
            Ok(Outcome::NotCovered(v)) => prop_assert!(!v.covered && !v.reason.is_empty()),
            Err(_) => {}
        }
    }

    #[test]
    fn balinski_agrees_with_connectivity(g in random_graph(9), d in 1usize..6) {
        prop_assert_eq!(balinski_check(&g, d), g.num_vertices() > d && vertex_connectivity(&g) >= d);
    }
}
