use itertools::Itertools;

use fullerene_af::forcing::{anti_forcing_number, forcing_number, is_anti_forcing, refute_size, SearchOptions};
use fullerene_af::matching::{enumerate_perfect_matchings, find_perfect_matching};
use fullerene_af::plane::validate_fullerene;
use fullerene_af::{fixtures, EdgeSet, FullereneGraph, Graph};

fn corpus() -> Vec<FullereneGraph> {
    vec![fixtures::f20(), fixtures::f24(), fixtures::f26()]
}

#[test]
fn orders_are_even_and_not_22() {
    for f in corpus() {
        let n = f.vertex_count();
        assert!(n % 2 == 0 && n >= 20 && n != 22);
    }
}

#[test]
fn fullerenes_have_several_perfect_matchings() {
    for f in corpus() {
        assert!(enumerate_perfect_matchings(f.graph(), 2).matchings.len() >= 2);
        assert!(!fullerene_af::matching::is_uniquely_matchable(f.graph()));
    }
}

fn disjoint(g: &Graph, e: usize, f: usize) -> bool {
    let [a, b] = g.endpoints(e);
    let [c, d] = g.endpoints(f);
    a != c && a != d && b != c && b != d
}

#[test]
fn two_extendable_exhaustively_on_the_dodecahedron() {
    let f = fixtures::f20();
    let g = f.graph();
    for (e, h) in g.edge_ids().into_iter().tuple_combinations() {
        if !disjoint(g, e, h) {
            continue;
        }
        let rest = g.without_vertices(g.endpoints(e).into_iter().chain(g.endpoints(h)));
        assert!(find_perfect_matching(&rest).is_some(), "{e} {h}");
    }
}

#[test]
fn two_extendable_on_sampled_pairs() {
    for f in [fixtures::f24(), fixtures::f26()] {
        let g = f.graph();
        for (e, h) in g.edge_ids().into_iter().tuple_combinations().step_by(7) {
            if disjoint(g, e, h) {
                let rest = g.without_vertices(g.endpoints(e).into_iter().chain(g.endpoints(h)));
                assert!(find_perfect_matching(&rest).is_some(), "{e} {h}");
            }
        }
    }
}

/// Edge cuts of size `k` whose removal disconnects `g` and no proper subset
/// does, returned with the smaller side.
fn minimal_cuts(g: &Graph, k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for cut in g.edge_ids().into_iter().combinations(k) {
        let comps = g.without_edges(&EdgeSet::new(cut.iter().copied())).components();
        if comps.len() < 2 {
            continue;
        }
        let minimal = cut.iter().all(|&drop| {
            let smaller = EdgeSet::new(cut.iter().copied().filter(|&e| e != drop));
            g.without_edges(&smaller).is_connected()
        });
        if minimal {
            let small = comps.into_iter().min_by_key(Vec::len).unwrap();
            out.push((cut, small));
        }
    }
    out
}

#[test]
fn three_cuts_isolate_a_vertex() {
    let f = fixtures::f20();
    let cuts = minimal_cuts(f.graph(), 3);
    assert_eq!(cuts.len(), 20);
    assert!(cuts.iter().all(|(_, side)| side.len() == 1));
}

#[test]
fn four_cuts_isolate_an_edge() {
    let f = fixtures::f20();
    let cuts = minimal_cuts(f.graph(), 4);
    assert_eq!(cuts.len(), 30);
    assert!(cuts.iter().all(|(_, side)| side.len() == 2));
}

#[test]
fn refutation_agrees_with_the_search() {
    for f in [fixtures::f20(), fixtures::f24()] {
        let cert = anti_forcing_number(&f, SearchOptions::anti_forcing()).unwrap();
        assert_eq!(cert.number, 4);
        assert!(refute_size(&f, cert.number - 1));
        assert!(!refute_size(&f, cert.number));
    }
}

#[test]
fn proper_subsets_of_a_minimum_witness_fail() {
    for f in [fixtures::f20(), fixtures::f24()] {
        let cert = anti_forcing_number(&f, SearchOptions::anti_forcing()).unwrap();
        for drop in cert.witness.iter() {
            let smaller = EdgeSet::new(cert.witness.iter().copied().filter(|e| e != drop));
            let left = f.graph().without_edges(&smaller);
            assert!(enumerate_perfect_matchings(&left, 2).matchings.len() >= 2);
        }
    }
}

#[test]
fn marked_fixture_sets_are_anti_forcing() {
    let pairs = [(fixtures::f20(), fixtures::f20_marked()), (fixtures::f24(), fixtures::f24_marked()), (fixtures::f26(), fixtures::f26_marked())];
    for (f, s) in pairs {
        assert!(is_anti_forcing(f.graph(), &s));
        let left = f.graph().without_edges(&s);
        assert_eq!(enumerate_perfect_matchings(&left, 2).matchings.len(), 1);
    }
}

#[test]
fn frozen_forcing_numbers() {
    // exhaustive values over all perfect matchings
    assert_eq!(forcing_number(&fixtures::f20(), SearchOptions::forcing()).unwrap().number, 3);
    let f24 = forcing_number(&fixtures::f24(), SearchOptions::forcing()).unwrap();
    assert_eq!(f24.number, 2);
    let g = fixtures::f24();
    let containing = enumerate_perfect_matchings(g.graph(), 1000)
        .matchings
        .into_iter()
        .filter(|m| f24.witness.iter().all(|&e| m.edges().contains(e)))
        .count();
    assert_eq!(containing, 1);
}

#[test]
fn text_round_trip_preserves_validity() {
    for f in corpus() {
        let text = f.to_text(Some("round trip"));
        let back = fullerene_af::PlaneGraph::parse(&text).unwrap();
        let g = validate_fullerene(&back).unwrap();
        assert_eq!(g.vertex_count(), f.vertex_count());
        assert!(fullerene_af::plane_isomorphic(g.plane(), f.plane()));
    }
}
