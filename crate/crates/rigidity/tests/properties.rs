//! Randomized invariants of the public API on small arbitrary graphs.

use proptest::prelude::*;
use rigidity::{
    sample_framework, stress_matrix, stress_space_basis, Graph, PrimeField, RigidityEngine,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::new(n, edges).expect("valid by construction")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn json_round_trip_is_identity_and_stable(g in arb_graph(9)) {
        let json = g.to_json();
        let back = Graph::from_json(&json).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_json(), json);
    }

    #[test]
    fn rank_respects_both_upper_bounds(g in arb_graph(8), d in 1usize..=3) {
        let engine = RigidityEngine::default();
        let n = g.vertex_count();
        let rank = engine.rank_d(&g, d);
        prop_assert!(rank <= g.edge_count());
        if n > d {
            prop_assert!(rank <= d * n - d * (d + 1) / 2);
        }
        prop_assert_eq!(rank == g.edge_count(), engine.is_independent(&g, d));
    }

    #[test]
    fn deleting_one_edge_drops_rank_by_at_most_one(g in arb_graph(7), d in 1usize..=3) {
        prop_assume!(g.edge_count() >= 1);
        let engine = RigidityEngine::default();
        let rank = engine.rank_d(&g, d);
        for &(u, v) in g.edges() {
            let smaller = g.delete_edge(u, v).unwrap();
            let r = engine.rank_d(&smaller, d);
            prop_assert!(r == rank || r + 1 == rank);
        }
    }

    #[test]
    fn components_partition_the_edge_set(g in arb_graph(8), d in 1usize..=3) {
        let engine = RigidityEngine::default();
        let components = engine.m_components(&g, d).unwrap();
        let mut collected: Vec<(usize, usize)> =
            components.iter().flatten().copied().collect();
        collected.sort_unstable();
        prop_assert_eq!(collected, g.edges().to_vec());
        prop_assert!(components.iter().all(|c| !c.is_empty()));
        let bridges = engine.bridges(&g, d).unwrap();
        for b in &bridges {
            prop_assert!(components.iter().any(|c| c.len() == 1 && c[0] == *b));
        }
    }

    #[test]
    fn separability_witness_ranks_are_additive(g in arb_graph(8), d in 1usize..=3) {
        prop_assume!(g.edge_count() >= 1);
        let engine = RigidityEngine::default();
        let rank = engine.rank_d(&g, d);
        if let Some((e1, e2)) = engine.separability_witness(&g, d).unwrap() {
            prop_assert!(!e1.is_empty() && !e2.is_empty());
            let r1 = engine.rank_of_edge_set(&g, d, &e1).unwrap();
            let r2 = engine.rank_of_edge_set(&g, d, &e2).unwrap();
            prop_assert_eq!(r1 + r2, rank);
        } else {
            prop_assert!(engine.is_m_connected(&g, d).unwrap());
        }
    }

    #[test]
    fn stresses_annihilate_their_framework(g in arb_graph(7), d in 1usize..=3, seed in any::<u64>()) {
        prop_assume!(g.edge_count() >= 1);
        let fw = sample_framework(&g, d, PrimeField::mersenne61(), seed);
        for omega in stress_space_basis(&fw) {
            let m = stress_matrix(&fw, &omega).unwrap();
            for k in 0..d {
                let coords: Vec<u64> =
                    (0..g.vertex_count()).map(|v| fw.coordinate(v, k)).collect();
                let image = m.mul_vec(&coords).unwrap();
                prop_assert!(image.iter().all(|&x| x == 0));
            }
        }
    }
}
