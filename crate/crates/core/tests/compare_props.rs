mod common;

use common::{arb_graph, corpus, from_matrix, permuted};
use kmsgraph::compare::{fingerprint, isomorphic, match_vertices, reconstruct, spectral_data, VertexMatch};
use proptest::prelude::*;

#[test]
fn round_trip_on_corpus() {
    for g in corpus() {
        let d = spectral_data(&g, 6);
        assert_eq!(reconstruct(&d).unwrap(), g);
    }
}

/// Rooted out-trees on four vertices, one per parent array.
fn out_trees() -> Vec<kmsgraph::DirectedMultigraph> {
    let mut out = Vec::new();
    for p2 in 0..2 {
        for p3 in 0..3 {
            let mut a = vec![vec![0u64; 4]; 4];
            a[0][1] = 1;
            a[p2][2] = 1;
            a[p3][3] = 1;
            out.push(from_matrix(&a));
        }
    }
    out
}

#[test]
fn fingerprint_complete_on_small_trees() {
    let trees = out_trees();
    for g in &trees {
        for h in &trees {
            let same = fingerprint(g, 4).multiset() == fingerprint(h, 4).multiset();
            assert_eq!(same, isomorphic(g, h).unwrap());
        }
    }
}

proptest! {
    #[test]
    fn isomorphic_graphs_are_never_refuted(
        g in arb_graph(5, 8),
        perm_seed in proptest::collection::vec(any::<u32>(), 5),
    ) {
        let k = g.vertex_count();
        let mut perm: Vec<usize> = (0..k).collect();
        perm.sort_by_key(|&i| perm_seed[i]);
        let h = permuted(&g, &perm);
        prop_assert!(isomorphic(&g, &h).unwrap());
        for n in 0..=2 * k {
            let refuted = matches!(match_vertices(&g, &h, n), VertexMatch::Refuted { .. });
            prop_assert!(!refuted);
        }
    }

    #[test]
    fn fingerprints_begin_with_one(g in arb_graph(5, 8)) {
        prop_assert!(fingerprint(&g, 5).series.iter().all(|s| s[0] == 1u32.into()));
    }
}
