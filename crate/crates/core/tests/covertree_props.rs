mod common;

use common::corpus;
use kmsgraph::covertree::{cover_levels, periodic_tree_levels, prune_and_compare};
use kmsgraph::graph::parse_graph;
use kmsgraph::spectral::{scc_decomposition, SccReport};
use kmsgraph::DirectedMultigraph;

/// Cyclic components reaching `v` whose critical value equals `beta_v`.
fn dominant_components(r: &SccReport, v: usize) -> usize {
    let beta = r.critical_temperature(v).value;
    let target = r.component_of[v];
    r.components
        .iter()
        .enumerate()
        .filter(|(i, c)| c.has_cycle() && r.reaches(*i, target) && (c.beta() - beta).abs() < 1e-9)
        .count()
}

fn log_error(g: &DirectedMultigraph, name: &str, beta: f64, depth: usize) -> f64 {
    (cover_levels(g, name, depth).unwrap().upper_rate.ln() - beta).abs()
}

#[test]
fn growth_tracks_critical_value() {
    let mut chained = 0;
    for g in corpus() {
        let r = scc_decomposition(&g).unwrap();
        for (v, name) in g.names().iter().enumerate() {
            let beta = r.critical_temperature(v).value;
            if !beta.is_finite() {
                continue;
            }
            let e80 = log_error(&g, name, beta, 80);
            if dominant_components(&r, v) == 1 {
                assert!(e80 < 5e-2, "error {e80} at {name} in {}", g.to_edge_list());
            } else {
                // k chained components of equal radius give |A_n| ~ n^(k-1) rho^n,
                // so the error decays like log(N) / N rather than 1 / N.
                chained += 1;
                let e320 = log_error(&g, name, beta, 320);
                let e1280 = log_error(&g, name, beta, 1280);
                assert!(e320 < e80 && e1280 < e320 && e1280 < 5e-2, "{e80} {e320} {e1280} in {}", g.to_edge_list());
            }
        }
    }
    assert!(chained > 0);
}

#[test]
fn binary_tree_error_shrinks() {
    let g = parse_graph("vertex v\nvertex w\nedge v v 2\nedge v w\nedge w w 2\n").unwrap();
    let errors: Vec<f64> = [20, 40, 80, 160]
        .iter()
        .map(|&n| log_error(&g, "w", 2f64.ln(), n))
        .collect();
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
}

#[test]
fn periodic_tree_error_bound() {
    let cases: [(&[u64], usize); 6] = [
        (&[1, 2, 2], 30),
        (&[1, 2, 2], 60),
        (&[1, 2, 2, 2], 40),
        (&[1, 2, 2, 2], 60),
        (&[3], 10),
        (&[2, 5], 50),
    ];
    for (k, depth) in cases {
        let c = periodic_tree_levels(k, depth).unwrap();
        let mean = (k.iter().map(|&x| (x as f64).ln()).sum::<f64>() / k.len() as f64).exp();
        let max = *k.iter().max().unwrap() as f64;
        assert!((c.upper_rate - mean).abs() < max / depth as f64, "{k:?} at {depth}");
        assert!(c.lower_rate <= c.upper_rate);
    }
}

/// `|E^{n+1} v| <= (max in-degree) |E^n v|` caps every window rate.
#[test]
fn growth_below_in_degree_bound() {
    for g in corpus() {
        let indeg = (0..g.vertex_count())
            .map(|v| g.predecessors(v).iter().map(|&(_, m)| m).sum::<u64>())
            .max()
            .unwrap() as f64;
        for name in g.names() {
            let c = cover_levels(&g, name, 40).unwrap();
            assert!(c.upper_rate <= indeg + 1e-9);
        }
    }
}

/// Constant factors push finite-window rates above the spectral radius.
#[test]
fn window_rate_can_exceed_radius() {
    let g = parse_graph("vertex a\nvertex b\nedge a b\nedge b b\n").unwrap();
    let rho = scc_decomposition(&g).unwrap().spectral_radius().value;
    let c = cover_levels(&g, "b", 80).unwrap();
    assert_eq!(rho, 1.0);
    assert!(c.upper_rate > rho + 1e-9);
}

#[test]
fn pruning_keeps_growth_on_cyclic_ancestry() {
    for g in corpus() {
        let r = scc_decomposition(&g).unwrap();
        for (v, name) in g.names().iter().enumerate() {
            let p = prune_and_compare(&g, name, 60).unwrap();
            assert!(p.pruned.levels.iter().zip(&p.full.levels).all(|(a, b)| a <= b));
            if r.critical_temperature(v).witness.is_none() {
                assert!(!p.holds);
            }
        }
    }
}
