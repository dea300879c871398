mod common;

use common::{arb_graph, corpus};
use kmsgraph::spectral::{scc_decomposition, SccReport};
use kmsgraph::DirectedMultigraph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(g: &DirectedMultigraph) -> SccReport {
    scc_decomposition(g).unwrap()
}

#[test]
fn critical_values_increase_along_reachability() {
    for g in corpus() {
        let r = report(&g);
        let k = g.vertex_count();
        for v in 0..k {
            for w in 0..k {
                let (cv, cw) = (r.component_of[v], r.component_of[w]);
                if r.reaches(cv, cw) {
                    assert!(
                        r.critical_temperature(v).value <= r.critical_temperature(w).value,
                        "{}",
                        g.to_edge_list()
                    );
                }
            }
        }
    }
}

/// Collatz-Wielandt bracket of `rho(A + I) - 1` after power iteration on the
/// full matrix from the all-ones vector.
fn power_bracket(g: &DirectedMultigraph, iterations: usize) -> (f64, f64) {
    let a = g.adjacency();
    let k = a.len();
    let mut x = vec![1.0; k];
    let mut bracket = (0.0, f64::INFINITY);
    for _ in 0..iterations {
        let y: Vec<f64> = (0..k)
            .map(|i| x[i] + (0..k).map(|j| a[i][j] as f64 * x[j]).sum::<f64>())
            .collect();
        let ratios = (0..k).map(|i| y[i] / x[i]);
        let lo = ratios.clone().fold(f64::INFINITY, f64::min);
        let hi = ratios.fold(0.0, f64::max);
        bracket = (lo - 1.0, hi - 1.0);
        let norm = y.iter().copied().fold(0.0, f64::max);
        x = y.iter().map(|v| v / norm).collect();
    }
    bracket
}

#[test]
fn whole_radius_is_max_component_radius() {
    for g in corpus() {
        let r = report(&g);
        let rho = r.spectral_radius().value;
        let best = r.components.iter().map(|c| c.radius.value).fold(0.0, f64::max);
        assert_eq!(best, rho);
        let (lo, hi) = power_bracket(&g, 500);
        assert!(lo - 1e-9 <= rho && rho <= hi + 1e-9, "{rho} outside [{lo}, {hi}] in {}", g.to_edge_list());
    }
}

#[test]
fn max_critical_value_is_log_radius() {
    for g in corpus() {
        let r = report(&g);
        if r.components.iter().all(|c| !c.has_cycle()) {
            continue;
        }
        let top = (0..g.vertex_count())
            .map(|v| r.critical_temperature(v).value)
            .fold(f64::NEG_INFINITY, f64::max);
        assert!((top - r.spectral_radius().value.ln()).abs() < 1e-9, "{}", g.to_edge_list());
    }
}

/// Random closed walks inside a component have lengths divisible by its period.
#[test]
fn period_divides_sampled_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in corpus() {
        let r = report(&g);
        for c in r.components.iter().filter(|c| c.has_cycle()) {
            let s = c.period.unwrap();
            let mut found = 0;
            let mut attempts = 0;
            while found < 50 && attempts < 500 {
                attempts += 1;
                let start = c.vertices[rng.gen_range(0..c.vertices.len())];
                let mut at = start;
                for len in 1..=200u64 {
                    let inside: Vec<usize> = g
                        .successors(at)
                        .iter()
                        .map(|&(w, _)| w)
                        .filter(|w| c.contains(*w))
                        .collect();
                    at = inside[rng.gen_range(0..inside.len())];
                    if at == start {
                        assert_eq!(len % s, 0, "closed walk of length {len}, period {s}");
                        found += 1;
                        break;
                    }
                }
            }
            assert_eq!(found, 50, "too few cycles sampled in {}", g.to_edge_list());
        }
    }
}

proptest! {
    #[test]
    fn perron_row_sum_bounds(g in arb_graph(5, 12)) {
        let r = report(&g);
        for c in r.components.iter().filter(|c| c.has_cycle()) {
            let sums: Vec<f64> = c
                .vertices
                .iter()
                .map(|&v| {
                    g.successors(v).iter().filter(|(w, _)| c.contains(*w)).map(|&(_, m)| m as f64).sum()
                })
                .collect();
            let lo = sums.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = sums.iter().copied().fold(0.0, f64::max);
            let rho = c.radius.value;
            prop_assert!(lo - 1e-9 <= rho && rho <= hi + 1e-9, "{} not in [{}, {}]", rho, lo, hi);
        }
    }
}
