use kmsgraph::families::{
    ladder_graph, ladder_partition, ladder_sup_probe, skip_harmonic, skip_return_sums,
    staircase_bruteforce_identity, wild_graph,
};
use kmsgraph::series::partition_partial;
use kmsgraph::spectral::scc_decomposition;
use kmsgraph::Settings;

/// Truncated-graph sums reproduce `Z_{n+1} = 1/(1 - e^-beta) + a Z_n`.
#[test]
fn ladder_recurrence_on_truncations() {
    let g = ladder_graph(6);
    let r = scc_decomposition(&g).unwrap();
    let s = Settings::default();
    for beta in [1.0f64, 1.5, 2.0] {
        let t = (-beta).exp();
        let a = t / (1.0 - t);
        let z: Vec<_> = (0..=6).map(|n| partition_partial(&g, &r, n, beta, 400, &s).unwrap()).collect();
        for n in 0..=5 {
            let lhs = z[n + 1].partial_sum;
            let rhs = 1.0 / (1.0 - t) + a * z[n].partial_sum;
            let slack = z[n + 1].tail_bound + a * z[n].tail_bound + 1e-12;
            assert!((lhs - rhs).abs() <= slack, "beta {beta}, n {n}: {lhs} vs {rhs}");
            let closed = ladder_partition(n + 1, beta).unwrap().value;
            assert!((lhs - closed).abs() <= z[n + 1].tail_bound + 1e-12);
        }
    }
}

#[test]
fn ladder_sup_transition() {
    let low = ladder_sup_probe(0.5, 50).unwrap();
    assert!(low.values.windows(2).all(|w| w[1] > w[0]));
    assert!(low.sup() > 1e8 && !low.stabilized);
    let high = ladder_sup_probe(1.0, 50).unwrap();
    assert!(high.stabilized);
    let t = (-1f64).exp();
    let limit = 1.0 / (1.0 - t) / (1.0 - t / (1.0 - t));
    assert!(high.sup() <= limit && limit - high.sup() < 1e-9);
}

#[test]
fn staircase_identity_on_all_short_prefixes() {
    let mut prefixes: Vec<Vec<u64>> = vec![vec![]];
    for len in 1..=4 {
        let mut next = Vec::new();
        for p in prefixes.iter().filter(|p| p.len() == len - 1) {
            for a in 0..=3 {
                let mut q = p.clone();
                q.push(a);
                next.push(q);
            }
        }
        prefixes.extend(next);
    }
    assert_eq!(prefixes.len(), 1 + 4 + 16 + 64 + 256);
    for a in &prefixes {
        for beta in [-0.5, -1.0, -2.0] {
            let c = staircase_bruteforce_identity(a, beta).unwrap();
            assert!(c.equal, "{a:?} at {beta}: {} vs {}", c.lhs, c.rhs);
        }
    }
}

#[test]
fn skip_harmonic_is_geometric() {
    for beta in [-0.5, -1.0, -2.0] {
        let h = skip_harmonic(beta);
        assert!(h.residual < 1e-10);
        assert!(h.lambda1 > 0.0 && h.a > 0.0);
        let total: f64 = (0..2000).map(|n| h.entry(n)).sum();
        assert!((total - 1.0).abs() < 1e-12);
        let ratio = h.entry(1) / h.entry(0);
        for n in 0..50 {
            assert!((h.entry(n + 1) / h.entry(n) - ratio).abs() < 1e-9);
            assert!(h.entry(n) > 0.0);
        }
    }
}

#[test]
fn skip_sums_grow_on_the_embedded_staircase() {
    for beta in [-0.5, -1.0, -2.0] {
        let s = skip_return_sums(beta, 60).unwrap();
        assert!(s.unbounded_trend());
        assert!(s.sub_staircase.last().unwrap() > &(1.0 + (2.0 * beta).exp()));
    }
}

#[test]
fn wild_ratios_bounded() {
    for d in [1.1, 1.5, 2.0, 2.5, 3.7] {
        let w = wild_graph(&[d], 120).unwrap();
        let ratios = &w.branches[0].ratios[2..];
        let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = ratios.iter().copied().fold(0.0, f64::max);
        assert!(lo > 0.0 && hi.is_finite() && hi <= 1.0, "d = {d}: [{lo}, {hi}]");
        assert_eq!(w.branches[0].predicted_beta, d.ln());
    }
}
