//! Infinite graph families, handled through closed forms and finite
//! truncations.
//!
//! * ladder: vertices `v_0, v_1, ...`, a loop at each `v_i` and a step
//!   `v_i -> v_{i+1}`.
//! * staircase: for a sequence `a_0, a_1, ...`, corner vertices `w_i` joined by
//!   a shortcut `w_i -> w_{i+1}` and by a chain of `a_i + 1` steps.
//! * skip: `v_n -> v_{n+1}` and `v_n -> v_{n+2}` for every `n`.
//! * wild: one chain per `d > 1` with `a_k` parallel edges `v_k -> v_{k-1}`,
//!   `a_k = floor(d^k / (a_1 ... a_{k-1}))`, all chains draining into a hub.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{enumerate_paths_at, DirectedMultigraph, GraphBuilder};
use crate::series::partition_partial;
use crate::settings::Settings;
use crate::spectral::scc_decomposition_with;

/// Relative threshold below which successive values count as stable.
pub const STABLE_TOL: f64 = 1e-9;

/// Partial products moving by more than this leave a staircase undecided.
pub const PRODUCT_TOL: f64 = 1e-12;

/// Path cap for the staircase brute force.
pub const STAIRCASE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StaircaseRule {
    Explicit(Vec<u64>),
    /// `a_n = p n + q`
    Affine { p: u64, q: u64 },
}

impl StaircaseRule {
    /// `a_i`, or `None` past the end of an explicit list.
    pub fn term(&self, i: usize) -> Option<u64> {
        match self {
            Self::Explicit(a) => a.get(i).copied(),
            Self::Affine { p, q } => Some(p * i as u64 + q),
        }
    }

    /// The first `n` terms (fewer for a short explicit list).
    pub fn prefix(&self, n: usize) -> Vec<u64> {
        (0..n).map_while(|i| self.term(i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FamilySpec {
    Ladder {
        #[serde(rename = "N")]
        depth: usize,
    },
    Staircase {
        a: StaircaseRule,
        #[serde(rename = "N")]
        depth: usize,
    },
    Skip {
        #[serde(rename = "N")]
        depth: usize,
    },
    Wild {
        d: Vec<f64>,
        #[serde(rename = "N")]
        depth: usize,
    },
}

impl FamilySpec {
    pub fn depth(&self) -> usize {
        match self {
            Self::Ladder { depth }
            | Self::Staircase { depth, .. }
            | Self::Skip { depth }
            | Self::Wild { depth, .. } => *depth,
        }
    }
}

/// Finite truncation at depth `n`: `v_0..v_n` for ladder and skip, `n`
/// shortcuts for a staircase, `n` levels per branch for wild.
pub fn truncate(spec: &FamilySpec, n: usize) -> Result<DirectedMultigraph> {
    if n == 0 {
        return Err(Error::InvalidInput("truncation depth must be at least 1".into()));
    }
    match spec {
        FamilySpec::Ladder { .. } => Ok(ladder_graph(n)),
        FamilySpec::Staircase { a, .. } => Ok(staircase_graph(&a.prefix(n)).0),
        FamilySpec::Skip { .. } => Ok(skip_graph(n)),
        FamilySpec::Wild { d, .. } => Ok(wild_graph(d, n)?.graph),
    }
}

fn chain_builder(n: usize) -> GraphBuilder {
    let mut b = GraphBuilder::new();
    for i in 0..=n {
        b.vertex(format!("v{i}")).expect("fresh name");
    }
    b
}

// ---------------------------------------------------------------- ladder

pub fn ladder_graph(n: usize) -> DirectedMultigraph {
    let mut b = chain_builder(n);
    for i in 0..=n {
        b.edge_by_index(i, i, 1);
        if i < n {
            b.edge_by_index(i, i + 1, 1);
        }
    }
    b.build()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderValue {
    /// `Z_{v_n}(beta)`
    pub value: f64,
    /// `sup_n Z_{v_n}(beta) < inf`, i.e. `beta > log 2`.
    pub sup_finite: bool,
}

fn ladder_ratio(beta: f64) -> (f64, f64) {
    let t = (-beta).exp();
    (1.0 / (1.0 - t), t / (1.0 - t))
}

pub fn ladder_partition(n: usize, beta: f64) -> Result<LadderValue> {
    if !(beta > 0.0) {
        return Err(Error::InvalidInput(format!("ladder needs beta > 0, got {beta}")));
    }
    let (base, a) = ladder_ratio(beta);
    let (value, sup_finite) = if (a - 1.0).abs() <= 1e-12 {
        (2.0 * (n as f64 + 1.0), false)
    } else {
        (base * (1.0 - a.powi(n as i32 + 1)) / (1.0 - a), a < 1.0)
    };
    Ok(LadderValue { value, sup_finite })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationCheck {
    pub closed_form: f64,
    /// `sum_{k < N} |E^k v_n| e^{-beta k}` on the truncated ladder.
    pub partial_sum: f64,
    pub tail_bound: f64,
    pub residual: f64,
}

impl TruncationCheck {
    pub fn within_bound(&self) -> bool {
        self.residual <= self.tail_bound + 1e-12 * self.closed_form.abs().max(1.0)
    }
}

pub fn ladder_truncation_check(n: usize, beta: f64, terms: usize) -> Result<TruncationCheck> {
    let closed_form = ladder_partition(n, beta)?.value;
    let g = ladder_graph(n);
    let settings = Settings::default();
    let report = scc_decomposition_with(&g, &settings)?;
    let s = partition_partial(&g, &report, n, beta, terms, &settings)?;
    Ok(TruncationCheck {
        closed_form,
        partial_sum: s.partial_sum,
        tail_bound: s.tail_bound,
        residual: (closed_form - s.partial_sum).abs(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SupProbe {
    /// `Z_{v_n}(beta)` for `n = 0..=n_max`.
    pub values: Vec<f64>,
    /// Last increment below `STABLE_TOL` relative to the value.
    pub stabilized: bool,
}

impl SupProbe {
    pub fn sup(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

pub fn ladder_sup_probe(beta: f64, n_max: usize) -> Result<SupProbe> {
    let values = (0..=n_max)
        .map(|n| ladder_partition(n, beta).map(|z| z.value))
        .collect::<Result<Vec<_>>>()?;
    let stabilized = n_max > 0 && {
        let (a, b) = (values[n_max - 1], values[n_max]);
        (b - a).abs() <= STABLE_TOL * b.abs()
    };
    Ok(SupProbe { values, stabilized })
}

// ------------------------------------------------------------- staircase

/// Staircase over `a` with the index of each corner vertex `w_i`.
pub fn staircase_graph(a: &[u64]) -> (DirectedMultigraph, Vec<usize>) {
    let mut corners = vec![0usize];
    for &ai in a {
        corners.push(corners.last().unwrap() + ai as usize + 1);
    }
    let m = *corners.last().unwrap();
    let mut b = chain_builder(m);
    for i in 0..m {
        b.edge_by_index(i, i + 1, 1);
    }
    for w in corners.windows(2) {
        b.edge_by_index(w[0], w[1], 1);
    }
    (b.build(), corners)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Summable,
    NotSummable,
    UndecidedAtN,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StaircaseSummability {
    /// `prod_{j < n} (1 + e^{a_j beta})^{-1}` for `n = 1..=N`.
    pub partial_products: Vec<f64>,
    pub verdict: Verdict,
    /// For undecided sequences: where the products appear to be heading.
    pub trend: Option<Verdict>,
}

pub fn staircase_summability(rule: &StaircaseRule, beta: f64, n: usize) -> Result<StaircaseSummability> {
    if !(beta < 0.0) {
        return Err(Error::InvalidInput(format!("staircase summability needs beta < 0, got {beta}")));
    }
    let a = rule.prefix(n);
    let mut partial_products = Vec::with_capacity(a.len());
    let mut p = 1.0;
    for &aj in &a {
        p /= 1.0 + (aj as f64 * beta).exp();
        partial_products.push(p);
    }
    let (verdict, trend) = match rule {
        StaircaseRule::Affine { p, .. } if *p > 0 => (Verdict::Summable, None),
        StaircaseRule::Affine { .. } => (Verdict::NotSummable, None),
        StaircaseRule::Explicit(_) => {
            let moving = match partial_products.as_slice() {
                [.., x, y] => (x - y).abs() > PRODUCT_TOL * x,
                _ => true,
            };
            if moving {
                (Verdict::UndecidedAtN, Some(Verdict::NotSummable))
            } else {
                (Verdict::Summable, None)
            }
        }
    };
    Ok(StaircaseSummability {
        partial_products,
        verdict,
        trend,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCheck {
    /// `sum_{mu in v_0 E^* v_m} e^{beta (m - |mu|)}` by enumeration.
    pub lhs: f64,
    /// `prod_j (1 + e^{a_j beta})`
    pub rhs: f64,
    pub equal: bool,
}

pub fn staircase_bruteforce_identity(a: &[u64], beta: f64) -> Result<IdentityCheck> {
    if a.len() > 12 {
        return Err(Error::SizeCap { size: a.len(), cap: 12 });
    }
    let (g, corners) = staircase_graph(a);
    let m = *corners.last().unwrap();
    let paths = enumerate_paths_at(&g, m, m, STAIRCASE_CAP)?;
    let lhs: f64 = paths
        .iter()
        .filter(|mu| mu.source == 0)
        .map(|mu| (beta * (m as f64 - mu.len() as f64)).exp())
        .sum();
    let rhs: f64 = a.iter().map(|&aj| 1.0 + (aj as f64 * beta).exp()).product();
    Ok(IdentityCheck {
        lhs,
        rhs,
        equal: (lhs - rhs).abs() <= 1e-10 * rhs,
    })
}

// ------------------------------------------------------------------ skip

pub fn skip_graph(n: usize) -> DirectedMultigraph {
    let mut b = chain_builder(n);
    for i in 0..n {
        b.edge_by_index(i, i + 1, 1);
    }
    for i in 0..n.saturating_sub(1) {
        b.edge_by_index(i, i + 2, 1);
    }
    b.build()
}

/// The skip graph with the shortcuts out of odd vertices removed: a staircase
/// with every `a_i = 1` and corners `v_0, v_2, v_4, ...`.
pub fn skip_sub_staircase(n: usize) -> DirectedMultigraph {
    let mut b = chain_builder(n);
    for i in 0..n {
        b.edge_by_index(i, i + 1, 1);
    }
    for i in (0..n.saturating_sub(1)).step_by(2) {
        b.edge_by_index(i, i + 2, 1);
    }
    b.build()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SkipHarmonic {
    pub lambda1: f64,
    pub a: f64,
    /// `max_{n <= 50} |chi_n - e^{-beta} (chi_{n+1} + chi_{n+2})|`
    pub residual: f64,
}

impl SkipHarmonic {
    /// `chi_n = A lambda_1^n`
    pub fn entry(&self, n: usize) -> f64 {
        self.a * self.lambda1.powi(n as i32)
    }
}

pub fn skip_harmonic(beta: f64) -> SkipHarmonic {
    let lambda1 = (-1.0 + (1.0 + 4.0 * beta.exp()).sqrt()) / 2.0;
    let mut h = SkipHarmonic {
        lambda1,
        a: 1.0 - lambda1,
        residual: 0.0,
    };
    let inv = (-beta).exp();
    h.residual = (0..=50)
        .map(|n| (h.entry(n) - inv * (h.entry(n + 1) + h.entry(n + 2))).abs())
        .fold(0.0, f64::max);
    h
}

/// `sum_{mu in s E^* t} e^{beta (level(t) - |mu|)}` for each `(t, level)`,
/// by dynamic programming over an acyclic graph.
pub fn return_speed_sums(
    g: &DirectedMultigraph,
    source: usize,
    targets: &[(usize, usize)],
    beta: f64,
) -> Result<Vec<f64>> {
    let report = scc_decomposition_with(g, &Settings::default())?;
    if report.components.iter().any(|c| c.has_cycle()) {
        return Err(Error::Unsupported("return sums need an acyclic graph".into()));
    }
    // W(w) = sum over paths source -> w of e^{-beta |mu|}.
    let t = (-beta).exp();
    let mut weight = vec![0.0; g.vertex_count()];
    weight[source] = 1.0;
    for c in &report.components {
        let u = c.vertices[0];
        for &(w, m) in g.successors(u) {
            weight[w] += weight[u] * m as f64 * t;
        }
    }
    Ok(targets
        .iter()
        .map(|&(v, level)| weight[v] * (beta * level as f64).exp())
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SkipReturnSums {
    /// Sums into `v_{2k}` on the full truncated skip graph, `k = 0..`.
    pub full: Vec<f64>,
    /// The same sums on the embedded sub-staircase.
    pub sub_staircase: Vec<f64>,
}

impl SkipReturnSums {
    /// Both sequences strictly increase, the full one dominating.
    pub fn unbounded_trend(&self) -> bool {
        let increasing = |s: &[f64]| s.windows(2).all(|w| w[1] > w[0]);
        increasing(&self.full)
            && increasing(&self.sub_staircase)
            && self.full.iter().zip(&self.sub_staircase).all(|(f, s)| f >= s)
    }
}

pub fn skip_return_sums(beta: f64, n: usize) -> Result<SkipReturnSums> {
    let targets: Vec<(usize, usize)> = (0..=n).step_by(2).map(|v| (v, v)).collect();
    Ok(SkipReturnSums {
        full: return_speed_sums(&skip_graph(n), 0, &targets, beta)?,
        sub_staircase: return_speed_sums(&skip_sub_staircase(n), 0, &targets, beta)?,
    })
}

// ------------------------------------------------------------------ wild

#[derive(Debug, Clone, PartialEq)]
pub struct WildBranch {
    pub d: f64,
    /// `a_1..a_depth`
    pub multiplicities: Vec<u64>,
    /// `prod_{j <= n} a_j / d^n` for `n = 1..=depth`.
    pub ratios: Vec<f64>,
    /// `v_0..v_depth` of this branch.
    pub vertices: Vec<usize>,
    pub predicted_beta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WildGraph {
    pub graph: DirectedMultigraph,
    pub hub: usize,
    pub branches: Vec<WildBranch>,
}

/// `a_n = floor(d r_{n-1})`, `r_n = d r_{n-1} / a_n`, `r_0 = 1`, so that
/// `r_n = d^n / (a_1 ... a_n)` stays in `[1, 2)`.
pub fn wild_multiplicities(d: f64, depth: usize) -> (Vec<u64>, Vec<f64>) {
    let mut r = 1.0;
    let mut a = Vec::with_capacity(depth);
    let mut ratios = Vec::with_capacity(depth);
    for _ in 0..depth {
        let an = (d * r).floor();
        r = d * r / an;
        a.push(an as u64);
        ratios.push(1.0 / r);
    }
    (a, ratios)
}

pub fn wild_graph(ds: &[f64], depth: usize) -> Result<WildGraph> {
    if let Some(d) = ds.iter().find(|&&d| !(d > 1.0) || !d.is_finite()) {
        return Err(Error::InvalidInput(format!("wild branch needs d > 1, got {d}")));
    }
    if depth < 3 {
        return Err(Error::InvalidInput("wild graph needs depth >= 3".into()));
    }
    let mut b = GraphBuilder::new();
    let hub = b.vertex("o")?;
    let mut branches = Vec::new();
    for (i, &d) in ds.iter().enumerate() {
        let vertices = (0..=depth)
            .map(|k| b.vertex(format!("b{i}_v{k}")))
            .collect::<Result<Vec<_>>>()?;
        let (multiplicities, ratios) = wild_multiplicities(d, depth);
        b.edge_by_index(vertices[0], hub, 1);
        for k in 1..=depth {
            b.edge_by_index(vertices[k], vertices[k - 1], multiplicities[k - 1]);
        }
        branches.push(WildBranch {
            d,
            multiplicities,
            ratios,
            vertices,
            predicted_beta: d.ln(),
        });
    }
    Ok(WildGraph {
        graph: b.build(),
        hub,
        branches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covertree::cover_levels_with;
    use crate::graph::path_counts_at;

    #[test]
    fn ladder_closed_form() {
        for beta in [0.3, 1.0, 2.5] {
            let z = ladder_partition(0, beta).unwrap().value;
            assert!((z - 1.0 / (1.0 - (-beta).exp())).abs() < 1e-14);
        }
        assert!((ladder_partition(1, 3f64.ln()).unwrap().value - 2.25).abs() < 1e-12);
        let z = ladder_partition(4, 2f64.ln()).unwrap();
        assert_eq!(z.value, 10.0);
        assert!(!z.sup_finite);
        assert!(ladder_partition(2, 1.0).unwrap().sup_finite);
        assert!(ladder_partition(2, 0.0).is_err());
    }

    #[test]
    fn ladder_truncation() {
        let c = ladder_truncation_check(1, 3f64.ln(), 60).unwrap();
        assert!(c.residual < 1e-9 && c.within_bound());
        let c = ladder_truncation_check(0, 2.0, 40).unwrap();
        assert!(c.residual < 1e-12 && c.within_bound());
    }

    #[test]
    fn ladder_sup() {
        let p = ladder_sup_probe(2f64.ln(), 50).unwrap();
        assert!(!p.stabilized);
        assert_eq!(p.sup(), 102.0);
        assert!(!ladder_sup_probe(0.5, 50).unwrap().stabilized);
        assert!(ladder_sup_probe(1.0, 50).unwrap().stabilized);
    }

    #[test]
    fn truncation_shapes() {
        let g = truncate(&FamilySpec::Ladder { depth: 2 }, 2).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!((0..3).filter(|&i| g.multiplicity(i, i) == 1).count(), 3);
        assert_eq!(g.edge_count(), 5);

        let g = truncate(&FamilySpec::Skip { depth: 3 }, 3).unwrap();
        let edges: Vec<_> = g.edges().map(|(s, t, _)| (s, t)).collect();
        assert_eq!(edges, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);

        let spec = FamilySpec::Staircase {
            a: StaircaseRule::Explicit(vec![1]),
            depth: 1,
        };
        let g = truncate(&spec, 1).unwrap();
        let edges: Vec<_> = g.edges().map(|(s, t, _)| (s, t)).collect();
        assert_eq!(edges, [(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn family_spec_json() {
        let spec: FamilySpec = serde_json::from_str(r#"{"kind":"ladder","N":4}"#).unwrap();
        assert_eq!(spec, FamilySpec::Ladder { depth: 4 });
        let spec: FamilySpec =
            serde_json::from_str(r#"{"kind":"staircase","a":{"p":1,"q":1},"N":5}"#).unwrap();
        assert_eq!(spec.depth(), 5);
        let spec: FamilySpec = serde_json::from_str(r#"{"kind":"wild","d":[1.5],"N":20}"#).unwrap();
        let back = serde_json::to_string(&spec).unwrap();
        assert_eq!(back, r#"{"kind":"wild","d":[1.5],"N":20}"#);
    }

    #[test]
    fn staircase_verdicts() {
        let s = staircase_summability(&StaircaseRule::Affine { p: 0, q: 2 }, -1.0, 30).unwrap();
        assert_eq!(s.verdict, Verdict::NotSummable);
        assert!(s.partial_products.windows(2).all(|w| w[1] < w[0]));
        let s = staircase_summability(&StaircaseRule::Affine { p: 1, q: 1 }, -1.0, 30).unwrap();
        assert_eq!(s.verdict, Verdict::Summable);
        let s = staircase_summability(&StaircaseRule::Affine { p: 0, q: 0 }, -0.7, 10).unwrap();
        assert_eq!(s.verdict, Verdict::NotSummable);
        assert!((s.partial_products[9] - 0.5f64.powi(10)).abs() < 1e-15);

        let s = staircase_summability(&StaircaseRule::Explicit(vec![2, 2, 2]), -1.0, 10).unwrap();
        assert_eq!(s.partial_products.len(), 3);
        assert_eq!((s.verdict, s.trend), (Verdict::UndecidedAtN, Some(Verdict::NotSummable)));
        assert!(staircase_summability(&StaircaseRule::Explicit(vec![1]), 0.0, 3).is_err());
    }

    #[test]
    fn staircase_identity_examples() {
        let c = staircase_bruteforce_identity(&[2, 2], -1.0).unwrap();
        assert!(c.equal);
        assert!((c.rhs - (1.0 + (-2f64).exp()).powi(2)).abs() < 1e-15);
        let c = staircase_bruteforce_identity(&[0], -1.0).unwrap();
        assert!(c.equal && (c.lhs - 2.0).abs() < 1e-15);
        let c = staircase_bruteforce_identity(&[], -1.0).unwrap();
        assert_eq!((c.lhs, c.rhs), (1.0, 1.0));
    }

    #[test]
    fn staircase_dp_matches_enumeration() {
        let a = [1, 3, 0, 2];
        let (g, corners) = staircase_graph(&a);
        let m = *corners.last().unwrap();
        let dp = return_speed_sums(&g, 0, &[(m, m)], -0.5).unwrap()[0];
        let c = staircase_bruteforce_identity(&a, -0.5).unwrap();
        assert!((dp - c.lhs).abs() < 1e-12 * c.lhs);
    }

    #[test]
    fn skip_examples() {
        let h = skip_harmonic(-1.0);
        assert!((h.lambda1 - 0.286053).abs() < 1e-6);
        assert!((h.a - 0.713947).abs() < 1e-6);
        assert!(h.residual < 1e-12);
        let h = skip_harmonic(-(4f64.ln()));
        assert!((h.lambda1 - (2f64.sqrt() - 1.0) / 2.0).abs() < 1e-15);
        assert!((h.a / (1.0 - h.lambda1) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn skip_return_sums_grow() {
        let s = skip_return_sums(-1.0, 40).unwrap();
        assert!(s.unbounded_trend());
        // Sub-staircase sums into v_{2k} are (1 + e^beta)^k.
        for (k, x) in s.sub_staircase.iter().enumerate() {
            assert!((x - (1.0 + (-1f64).exp()).powi(k as i32)).abs() < 1e-12 * x);
        }
        assert!(return_speed_sums(&ladder_graph(2), 0, &[(2, 2)], -1.0).is_err());
    }

    #[test]
    fn wild_examples() {
        let w = wild_graph(&[2.0], 20).unwrap();
        assert!(w.branches[0].multiplicities.iter().all(|&a| a == 2));
        let v0 = w.branches[0].vertices[0];
        let c = cover_levels_with(&w.graph, v0, 20, 10).unwrap();
        assert_eq!(c.upper_rate, 2.0);

        let w = wild_graph(&[1.5], 60).unwrap();
        let b = &w.branches[0];
        assert_eq!(&b.multiplicities[..4], &[1, 2, 1, 2]);
        assert!(b.ratios.iter().all(|&r| r > 0.5 && r <= 1.0));
        let c = cover_levels_with(&w.graph, b.vertices[0], 60, 10).unwrap();
        assert!((c.upper_rate - 1.5).abs() < 0.05);
        // Oracle: the integer-part recursion in exact arithmetic on counts.
        let t = path_counts_at(&w.graph, b.vertices[0], 10);
        let mut prod = 1u64;
        for n in 1..=10 {
            prod *= b.multiplicities[n - 1];
            assert_eq!(t.totals[n], prod.into());
        }

        let w = wild_graph(&[], 5).unwrap();
        assert_eq!(w.graph.vertex_count(), 1);
        assert!(wild_graph(&[1.0], 5).is_err());
        assert!(wild_graph(&[2.0], 2).is_err());
    }
}
