mod common;

use common::arb_graph;
use kmsgraph::graph::{enumerate_paths, hereditary_closure, path_counts, restrict};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Largest depth `<= 8` with at most `budget` paths ending at `v`.
fn affordable_depth(g: &kmsgraph::DirectedMultigraph, v: &str, budget: u64) -> usize {
    let t = path_counts(g, v, 8).unwrap();
    let mut total = BigUint::from(0u32);
    for n in 0..=8 {
        total += &t.totals[n];
        if total > BigUint::from(budget) {
            return n.saturating_sub(1);
        }
    }
    8
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumeration_histogram_matches_counts(g in arb_graph(6, 10)) {
        for v in g.names() {
            let depth = affordable_depth(&g, v, 50_000);
            let t = path_counts(&g, v, depth).unwrap();
            let paths = enumerate_paths(&g, v, depth, 1_000_000).unwrap();
            let mut hist = vec![BigUint::from(0u32); depth + 1];
            for p in &paths {
                hist[p.len()] += 1u32;
                prop_assert_eq!(g.name(p.range), v.as_str());
            }
            prop_assert_eq!(hist, t.totals);
        }
    }

    #[test]
    fn concatenation_lower_bound(g in arb_graph(5, 8), n in 0usize..4, m in 0usize..4) {
        let k = g.vertex_count();
        let tables: Vec<_> = g.names().iter().map(|v| path_counts(&g, v, n + m).unwrap()).collect();
        for w in 0..k {
            for u in 0..k {
                for v in 0..k {
                    let lhs = tables[v].count(n + m, w);
                    let rhs = tables[u].count(n, w) * tables[v].count(m, u);
                    prop_assert!(*lhs >= rhs);
                }
            }
        }
    }

    #[test]
    fn hereditary_closure_laws(g in arb_graph(6, 10), seed in proptest::collection::vec(any::<bool>(), 6), extra in 0usize..6) {
        let names = g.names();
        let set: Vec<&str> = names.iter().zip(&seed).filter(|(_, &b)| b).map(|(n, _)| n.as_str()).collect();
        let once = hereditary_closure(&g, &set).unwrap();
        let twice = hereditary_closure(&g, &once).unwrap();
        prop_assert_eq!(&once, &twice);
        let mut bigger: Vec<&str> = set.clone();
        bigger.push(names[extra % names.len()].as_str());
        let wide = hereditary_closure(&g, &bigger).unwrap();
        prop_assert!(once.iter().all(|v| wide.contains(v)));
        prop_assert_eq!(restrict(&g, names).unwrap(), g.clone());
    }
}
