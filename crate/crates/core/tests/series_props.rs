mod common;

use common::corpus;
use kmsgraph::graph::path_counts;
use kmsgraph::series::{all_closed_forms, partition_value};
use kmsgraph::spectral::scc_decomposition;
use num_traits::ToPrimitive;

#[test]
fn taylor_coefficients_are_path_counts() {
    for g in corpus() {
        let z = all_closed_forms(&g);
        for (v, name) in g.names().iter().enumerate() {
            let t = path_counts(&g, name, 20).unwrap();
            let taylor = z[v].taylor(21);
            for n in 0..=20 {
                assert_eq!(taylor[n], t.totals[n].clone().into(), "n = {n}, {name} in {}", g.to_edge_list());
            }
        }
    }
}

#[test]
fn poles_sit_at_critical_values() {
    for g in corpus() {
        let r = scc_decomposition(&g).unwrap();
        let z = all_closed_forms(&g);
        for v in 0..g.vertex_count() {
            let crit = r.critical_temperature(v);
            if crit.is_finite() {
                let pole = z[v].smallest_positive_pole().expect("pole");
                assert!((pole - (-crit.value).exp()).abs() < 1e-9, "{}", g.to_edge_list());
            }
        }
    }
}

/// `|E^n v| e^{-n beta_v}` stays bounded away from zero.
#[test]
fn no_decay_at_criticality() {
    for g in corpus() {
        let r = scc_decomposition(&g).unwrap();
        for (v, name) in g.names().iter().enumerate() {
            let beta = r.critical_temperature(v).value;
            if !(beta > 0.0) {
                continue;
            }
            let t = path_counts(&g, name, 60).unwrap();
            let m = (20..=60)
                .map(|n| t.totals[n].to_f64().unwrap() * (-(n as f64) * beta).exp())
                .fold(f64::INFINITY, f64::min);
            assert!(m > 1e-6, "min {m} at {name} in {}", g.to_edge_list());
        }
    }
}

#[test]
fn summation_agrees_with_closed_form() {
    for g in corpus() {
        let r = scc_decomposition(&g).unwrap();
        let z = all_closed_forms(&g);
        for (v, name) in g.names().iter().enumerate() {
            let crit = r.critical_temperature(v).value;
            for beta in [crit.max(0.0) + 0.3, crit.max(0.0) + 1.5] {
                let s = partition_value(&g, name, beta, 1e-12).unwrap();
                let exact = z[v].eval((-beta).exp());
                let value = s.value.unwrap();
                assert!(
                    (value - exact).abs() <= s.tail_bound + 1e-12,
                    "{value} vs {exact} (tail {}) at {name}, beta {beta}, in {}",
                    s.tail_bound,
                    g.to_edge_list()
                );
            }
        }
    }
}
