//! Level counts of the directed cover `T(E, v)`, whose vertices are the finite
//! paths ending at `v`, and empirical growth rates over a trailing window.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{path_counts_at, DirectedMultigraph};
use crate::spectral::scc_decomposition;

pub const DEFAULT_WINDOW: usize = 10;

/// Tolerance on `log` growth rates for the pruning comparison.
pub const PRUNE_TOL: f64 = 1e-2;

#[derive(Debug, Clone, PartialEq)]
pub struct CoverLevels {
    /// `None` for trees not built from a graph vertex.
    pub base: Option<usize>,
    pub depth: usize,
    /// `levels[n] = |A_n|`
    pub levels: Vec<BigUint>,
    pub upper_rate: f64,
    pub lower_rate: f64,
}

impl CoverLevels {
    fn from_levels(base: Option<usize>, levels: Vec<BigUint>, window: usize) -> Self {
        let depth = levels.len() - 1;
        let (upper_rate, lower_rate) = window_rates(&levels, window);
        Self {
            base,
            depth,
            levels,
            upper_rate,
            lower_rate,
        }
    }

    /// Levels as decimal strings.
    pub fn level_strings(&self) -> Vec<String> {
        self.levels.iter().map(|x| x.to_string()).collect()
    }
}

#[derive(Serialize)]
struct CoverLevelsJson<'a> {
    base: Option<&'a str>,
    depth: usize,
    levels: Vec<String>,
    upper_rate: f64,
    lower_rate: f64,
}

impl CoverLevels {
    pub fn to_json(&self, g: Option<&DirectedMultigraph>) -> serde_json::Value {
        let doc = CoverLevelsJson {
            base: match (g, self.base) {
                (Some(g), Some(v)) => Some(g.name(v)),
                _ => None,
            },
            depth: self.depth,
            levels: self.level_strings(),
            upper_rate: self.upper_rate,
            lower_rate: self.lower_rate,
        };
        serde_json::to_value(doc).expect("plain data")
    }
}

/// Natural log of a big integer; `-inf` for zero.
pub fn big_ln(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64 bits");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `count^(1/n)`, returned exactly when it is an integer.
fn nth_root(count: &BigUint, n: usize) -> f64 {
    if count.is_zero() {
        return 0.0;
    }
    let rate = (big_ln(count) / n as f64).exp();
    let r = rate.round();
    if r >= 1.0 && (rate - r).abs() < 1e-6 && BigUint::from(r as u64).pow(n as u32) == *count {
        return r;
    }
    rate
}

/// Max and min of `|A_n|^(1/n)` over `n` in `[N - window, N]`, `n >= 1`.
fn window_rates(levels: &[BigUint], window: usize) -> (f64, f64) {
    let depth = levels.len() - 1;
    if depth == 0 {
        return (0.0, 0.0);
    }
    let lo = depth.saturating_sub(window).max(1);
    let rates: Vec<f64> = (lo..=depth).map(|n| nth_root(&levels[n], n)).collect();
    let upper = rates.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lower = rates.iter().copied().fold(f64::INFINITY, f64::min);
    (upper, lower)
}

pub fn cover_levels(g: &DirectedMultigraph, v: &str, depth: usize) -> Result<CoverLevels> {
    cover_levels_with(g, g.index_of(v)?, depth, DEFAULT_WINDOW)
}

pub fn cover_levels_with(
    g: &DirectedMultigraph,
    v: usize,
    depth: usize,
    window: usize,
) -> Result<CoverLevels> {
    if depth == 0 {
        return Err(Error::InvalidInput("depth must be at least 1".into()));
    }
    let table = path_counts_at(g, v, depth);
    Ok(CoverLevels::from_levels(Some(v), table.totals, window))
}

/// Tree whose level-`m` vertices each have `k[m mod n]` children.
pub fn periodic_tree_levels(k: &[u64], depth: usize) -> Result<CoverLevels> {
    if k.is_empty() {
        return Err(Error::InvalidInput("empty branching sequence".into()));
    }
    if k.contains(&0) {
        return Err(Error::InvalidInput("branching numbers must be positive".into()));
    }
    let mut levels = vec![BigUint::from(1u32)];
    for m in 0..depth {
        let next = &levels[m] * k[m % k.len()];
        levels.push(next);
    }
    Ok(CoverLevels::from_levels(None, levels, DEFAULT_WINDOW))
}

#[derive(Debug, Clone, PartialEq)]
pub struct PruneComparison {
    pub full: CoverLevels,
    /// Levels of `T'`: paths whose source has arbitrarily long incoming paths.
    pub pruned: CoverLevels,
    /// `T'` reaches depth `N` and `|log gr T - log gr T'| <= PRUNE_TOL`.
    pub holds: bool,
}

impl PruneComparison {
    pub fn upper_full(&self) -> f64 {
        self.full.upper_rate
    }

    pub fn upper_pruned(&self) -> f64 {
        self.pruned.upper_rate
    }
}

pub fn prune_and_compare(g: &DirectedMultigraph, v: &str, depth: usize) -> Result<PruneComparison> {
    let v = g.index_of(v)?;
    if depth == 0 {
        return Err(Error::InvalidInput("depth must be at least 1".into()));
    }
    let report = scc_decomposition(g)?;
    let infinite_past: Vec<bool> = (0..g.vertex_count())
        .map(|w| report.critical_temperature(w).witness.is_some())
        .collect();
    let table = path_counts_at(g, v, depth);
    let pruned_levels: Vec<BigUint> = table
        .counts
        .iter()
        .map(|row| {
            row.iter()
                .zip(&infinite_past)
                .filter(|(_, &keep)| keep)
                .map(|(c, _)| c.clone())
                .sum()
        })
        .collect();
    let full = CoverLevels::from_levels(Some(v), table.totals, DEFAULT_WINDOW);
    let pruned = CoverLevels::from_levels(Some(v), pruned_levels, DEFAULT_WINDOW);
    let holds = !pruned.levels[depth].is_zero()
        && (full.upper_rate.ln() - pruned.upper_rate.ln()).abs() <= PRUNE_TOL;
    Ok(PruneComparison { full, pruned, holds })
}
