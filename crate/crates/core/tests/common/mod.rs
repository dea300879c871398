//! Shared test corpus: every graph on one or two vertices with total
//! multiplicity at most 6, topped up with seeded random graphs on three and
//! four vertices (same multiplicity budget) to 500 graphs.

#![allow(dead_code)]

use kmsgraph::{DirectedMultigraph, GraphBuilder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SIZE: usize = 500;
pub const MAX_TOTAL: u64 = 6;

pub fn from_matrix(a: &[Vec<u64>]) -> DirectedMultigraph {
    let mut b = GraphBuilder::new();
    let names: Vec<String> = (0..a.len()).map(|i| format!("x{i}")).collect();
    for n in &names {
        b.vertex(n.clone()).unwrap();
    }
    for (i, row) in a.iter().enumerate() {
        for (j, &m) in row.iter().enumerate() {
            if m > 0 {
                b.edge(&names[i], &names[j], m).unwrap();
            }
        }
    }
    b.build()
}

/// Matrices of size `k` with nonnegative entries summing to at most `budget`.
fn exhaustive(k: usize, budget: u64) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    let mut entries = vec![0u64; k * k];
    fn rec(i: usize, left: u64, entries: &mut Vec<u64>, k: usize, out: &mut Vec<Vec<Vec<u64>>>) {
        if i == entries.len() {
            out.push(entries.chunks(k).map(|r| r.to_vec()).collect());
            return;
        }
        for m in 0..=left {
            entries[i] = m;
            rec(i + 1, left - m, entries, k, out);
        }
        entries[i] = 0;
    }
    rec(0, budget, &mut entries, k, &mut out);
    out
}

pub fn random_graph(rng: &mut ChaCha8Rng, k: usize, budget: u64) -> DirectedMultigraph {
    let total = rng.gen_range(1..=budget);
    let mut a = vec![vec![0u64; k]; k];
    for _ in 0..total {
        a[rng.gen_range(0..k)][rng.gen_range(0..k)] += 1;
    }
    from_matrix(&a)
}

pub fn corpus() -> Vec<DirectedMultigraph> {
    let mut out: Vec<DirectedMultigraph> = (1..=2)
        .flat_map(|k| exhaustive(k, MAX_TOTAL))
        .map(|a| from_matrix(&a))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    while out.len() < CORPUS_SIZE {
        let k = rng.gen_range(3..=4);
        out.push(random_graph(&mut rng, k, MAX_TOTAL));
    }
    out
}

/// Random multigraphs with up to `max_vertices` vertices and total
/// multiplicity at most `max_total`.
pub fn arb_graph(
    max_vertices: usize,
    max_total: usize,
) -> impl proptest::strategy::Strategy<Value = DirectedMultigraph> {
    use proptest::prelude::*;
    (1..=max_vertices).prop_flat_map(move |k| {
        proptest::collection::vec((0..k, 0..k), 0..=max_total).prop_map(move |cells| {
            let mut a = vec![vec![0u64; k]; k];
            for (i, j) in cells {
                a[i][j] += 1;
            }
            from_matrix(&a)
        })
    })
}

/// The same graph with vertices listed in the order `perm`.
pub fn permuted(g: &DirectedMultigraph, perm: &[usize]) -> DirectedMultigraph {
    let mut b = GraphBuilder::new();
    for &p in perm {
        b.vertex(g.name(p).to_string()).unwrap();
    }
    for (s, t, m) in g.edges() {
        b.edge(g.name(s), g.name(t), m).unwrap();
    }
    b.build()
}
