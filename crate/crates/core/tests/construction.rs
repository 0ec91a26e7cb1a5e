use std::collections::{BTreeMap, VecDeque};

use fullerene_af::forcing::{anti_forcing_number, refute_size_of, SearchOptions};
use fullerene_af::patchwork::digraph::initial_array;
use fullerene_af::patchwork::{
    construct_af4, f20_walk, f24_walks, generate_digraph, l14_walk, seed, synthesize, DistanceArray, SeedGraph, Walk,
};
use fullerene_af::{fixtures, plane_isomorphic, PatchError};

const PRODUCTIVE: [usize; 7] = [4, 5, 9, 11, 13, 14, 15];

/// Grows one patch per reachable node and applies every tag of every arc.
#[test]
fn geometric_steps_commute_with_array_operations() {
    let d = generate_digraph();
    let mut arcs_checked = 0;
    for i in PRODUCTIVE {
        let start = seed(i).unwrap();
        let mut patch_at: BTreeMap<DistanceArray, SeedGraph> = BTreeMap::new();
        let mut queue = VecDeque::new();
        patch_at.insert(start.distance_array().unwrap(), start.clone());
        queue.push_back(start.distance_array().unwrap());
        while let Some(node) = queue.pop_front() {
            let patch = patch_at[&node].clone();
            let succs: Vec<DistanceArray> = d.successors(&node).cloned().collect();
            for next in succs {
                for &tag in d.tags(&node, &next).unwrap() {
                    let grown = patch.grow(tag).unwrap_or_else(|e| panic!("L{i} {node} {tag}: {e}"));
                    assert_eq!(grown.distance_array().unwrap(), next);
                    assert_eq!(grown.vertex_count(), patch.vertex_count() + tag.vertices_added());
                    arcs_checked += 1;
                    if !next.is_empty() && !patch_at.contains_key(&next) {
                        patch_at.insert(next.clone(), grown);
                        queue.push_back(next.clone());
                    }
                }
            }
        }
    }
    assert!(arcs_checked >= 71);
}

#[test]
fn dead_seeds_are_pruned() {
    let d = generate_digraph();
    for i in [1, 2, 3, 6, 7, 8, 10, 12] {
        assert!(!d.contains(&initial_array(i).unwrap()), "L{i}");
    }
    for i in PRODUCTIVE {
        assert!(d.contains(&initial_array(i).unwrap()), "L{i}");
    }
}

#[test]
fn every_short_walk_synthesizes_a_fullerene_with_af_four() {
    let d = generate_digraph();
    let mut count = 0;
    for i in PRODUCTIVE {
        for arrays in d.walks_to_empty(&initial_array(i).unwrap(), 10) {
            let walk = Walk::from_arrays(i, &arrays).unwrap();
            let s = synthesize(&walk).unwrap_or_else(|e| panic!("{walk}: {e}"));
            let n = s.graph.vertex_count();
            assert_eq!(n, s.ledger(), "{walk}");
            assert!(n.is_multiple_of(2) && n >= 20 && n != 22 && n <= 32);
            assert!(refute_size_of(s.graph.graph(), 3, 4), "{walk}");
            count += 1;
        }
    }
    assert!(count > 50);
}

#[test]
fn synthesized_dodecahedron_has_af_four() {
    let s = synthesize(&f20_walk()).unwrap();
    let cert = anti_forcing_number(&s.graph, SearchOptions::anti_forcing()).unwrap();
    assert_eq!(cert.number, 4);
    assert_eq!(s.marked.len(), 4);
}

#[test]
fn every_gate_walk_gives_f24() {
    let d = generate_digraph();
    let walks = f24_walks(&d);
    assert!(!walks.is_empty());
    for w in walks {
        let s = synthesize(&w).unwrap();
        assert!(plane_isomorphic(s.graph.plane(), fixtures::f24().plane()), "{w}");
    }
}

#[test]
fn family_orders() {
    for n in [20, 24, 28, 30, 32, 34, 40] {
        let s = construct_af4(n).unwrap();
        assert_eq!(s.graph.vertex_count(), n);
    }
    assert!(matches!(construct_af4(22), Err(PatchError::InvalidOrder { n: 22 })));
    assert!(matches!(construct_af4(26), Err(PatchError::InvalidOrder { n: 26 })));
    assert!(matches!(construct_af4(31), Err(PatchError::InvalidOrder { n: 31 })));
}

#[test]
fn loop_repetitions_follow_the_order() {
    let w = l14_walk(16).unwrap();
    assert_eq!(w.o1_count(), 12);
    assert_eq!(w.steps.len(), 16);
    assert_eq!(synthesize(&w).unwrap().graph.vertex_count(), 32);
}
