use fullerene_af::fixtures;
use fullerene_af::matching::{bridges, enumerate_perfect_matchings, has_unique_perfect_matching, kotzig_reduce};
use fullerene_af::{EdgeSet, Graph, ReductionVerdict};
use proptest::prelude::*;

fn hosts() -> Vec<Graph> {
    vec![fixtures::f20().graph().clone(), fixtures::f24().graph().clone(), fixtures::f26().graph().clone()]
}

/// A fixture with a random edge subset and up to two vertex pairs removed.
fn subgraph() -> impl Strategy<Value = Graph> {
    (0usize..3, prop::collection::vec(any::<bool>(), 39), prop::collection::vec(0usize..26, 0..=4), 1u32..5)
        .prop_map(|(which, coins, verts, density)| {
            let g = hosts().swap_remove(which);
            // keep roughly one in `density` deletion coins
            let drop = EdgeSet::new(
                g.edge_ids().into_iter().filter(|&e| coins[e] && (e as u32).is_multiple_of(density)),
            );
            let verts: Vec<usize> = verts.into_iter().filter(|&v| v < g.vertex_bound()).collect();
            let even = verts.len() - verts.len() % 2;
            g.without_edges(&drop).without_vertices(verts[..even].iter().copied())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn uniqueness_agrees_with_enumeration(g in subgraph()) {
        let pms = enumerate_perfect_matchings(&g, 2);
        let slow = pms.matchings.len() == 1 && !pms.truncated;
        let fast = has_unique_perfect_matching(&g);
        prop_assert_eq!(fast.is_some(), slow);
        if let Some(m) = fast {
            prop_assert_eq!(m.edges(), pms.matchings[0].edges());
        }
    }

    #[test]
    fn forced_edges_lie_in_every_perfect_matching(g in subgraph()) {
        let red = kotzig_reduce(&g);
        let all = enumerate_perfect_matchings(&g, 5000);
        prop_assume!(!all.truncated);
        if red.verdict != ReductionVerdict::Stable {
            prop_assert!(all.matchings.is_empty());
        }
        for m in &all.matchings {
            for &e in &red.forced {
                prop_assert!(m.edges().contains(e));
            }
        }
    }

    #[test]
    fn reduction_partitions_the_vertices(g in subgraph()) {
        let red = kotzig_reduce(&g);
        let forced: Vec<usize> = red.forced.iter().flat_map(|&e| g.endpoints(e)).collect();
        let mut seen = forced.clone();
        seen.sort_unstable();
        seen.dedup();
        prop_assert_eq!(seen.len(), forced.len());
        if red.verdict == ReductionVerdict::Stable {
            prop_assert_eq!(red.residual.vertex_count() + forced.len(), g.vertex_count());
            if red.residual_is_empty() {
                prop_assert_eq!(forced.len(), g.vertex_count());
            }
        }
    }

    #[test]
    fn unique_matching_uses_a_bridge(g in subgraph()) {
        prop_assume!(g.vertex_count() >= 2 && g.is_connected());
        if let Some(m) = has_unique_perfect_matching(&g) {
            let b = bridges(&g);
            prop_assert!(b.intersects(m.edges()));
        }
    }
}
