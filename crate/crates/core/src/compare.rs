//! Path-count invariants of graphs: fingerprints, vertex matching,
//! reconstruction from the table `|w E^n v|`, Bratteli levels and a small
//! isomorphism check.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{path_counts_at, DirectedMultigraph, GraphBuilder};
use crate::spectral::scc_decomposition;

/// Largest graphs accepted by [`isomorphic`].
pub const ISO_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub depth: usize,
    /// `series[v][n] = |E^n v|`
    pub series: Vec<Vec<BigUint>>,
}

impl Fingerprint {
    /// Series sorted, forgetting which vertex carries which.
    pub fn multiset(&self) -> Vec<Vec<BigUint>> {
        let mut out = self.series.clone();
        out.sort();
        out
    }

    fn multiset_prefix(&self, n: usize) -> Vec<&[BigUint]> {
        let mut out: Vec<&[BigUint]> = self.series.iter().map(|s| &s[..=n]).collect();
        out.sort();
        out
    }
}

pub fn fingerprint(g: &DirectedMultigraph, depth: usize) -> Fingerprint {
    Fingerprint {
        depth,
        series: (0..g.vertex_count())
            .map(|v| path_counts_at(g, v, depth).totals)
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexMatch {
    /// The multisets first differ at this level.
    Refuted { level: usize },
    Compatible {
        /// Classes of vertices with equal series, paired across the graphs.
        classes: Vec<(Vec<usize>, Vec<usize>)>,
        /// Number of series-preserving bijections.
        bijections: BigUint,
    },
}

pub fn match_vertices(g: &DirectedMultigraph, h: &DirectedMultigraph, depth: usize) -> VertexMatch {
    if g.vertex_count() != h.vertex_count() {
        return VertexMatch::Refuted { level: 0 };
    }
    let (fg, fh) = (fingerprint(g, depth), fingerprint(h, depth));
    if let Some(level) = (0..=depth).find(|&n| fg.multiset_prefix(n) != fh.multiset_prefix(n)) {
        return VertexMatch::Refuted { level };
    }
    let group = |f: &Fingerprint| {
        let mut m: BTreeMap<Vec<BigUint>, Vec<usize>> = BTreeMap::new();
        for (v, s) in f.series.iter().enumerate() {
            m.entry(s.clone()).or_default().push(v);
        }
        m
    };
    let (gg, gh) = (group(&fg), group(&fh));
    let mut bijections = BigUint::from(1u32);
    let classes = gg
        .into_iter()
        .zip(gh)
        .map(|((_, a), (_, b))| {
            for k in 2..=a.len() {
                bijections *= k;
            }
            (a, b)
        })
        .collect();
    VertexMatch::Compatible {
        classes,
        bijections,
    }
}

/// The table `|w E^n v|` for `n <= depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralData {
    pub vertices: Vec<String>,
    pub depth: usize,
    /// `counts[n][w][v]`; signed so malformed inputs survive parsing and can
    /// be rejected with a reason.
    pub counts: Vec<Vec<Vec<BigInt>>>,
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    w: String,
    v: String,
    n: usize,
    count: Value,
}

#[derive(Serialize, Deserialize)]
struct SpectralJson {
    vertices: Vec<String>,
    #[serde(rename = "N")]
    depth: usize,
    table: Vec<TableEntry>,
}

pub fn spectral_data(g: &DirectedMultigraph, depth: usize) -> SpectralData {
    let k = g.vertex_count();
    let mut counts = vec![vec![vec![BigInt::zero(); k]; k]; depth + 1];
    for v in 0..k {
        let t = path_counts_at(g, v, depth);
        for (n, row) in t.counts.into_iter().enumerate() {
            for (w, c) in row.into_iter().enumerate() {
                counts[n][w][v] = BigInt::from(c);
            }
        }
    }
    SpectralData {
        vertices: g.names().to_vec(),
        depth,
        counts,
    }
}

impl SpectralData {
    /// Every entry, zeros included, ordered by `(n, w, v)`.
    pub fn to_json(&self) -> Value {
        let mut table = Vec::new();
        for (n, slice) in self.counts.iter().enumerate() {
            for (w, row) in slice.iter().enumerate() {
                for (v, c) in row.iter().enumerate() {
                    table.push(TableEntry {
                        w: self.vertices[w].clone(),
                        v: self.vertices[v].clone(),
                        n,
                        count: Value::String(c.to_string()),
                    });
                }
            }
        }
        serde_json::to_value(SpectralJson {
            vertices: self.vertices.clone(),
            depth: self.depth,
            table,
        })
        .expect("plain data")
    }

    /// Missing entries read as zero. Counts may be decimal strings or JSON
    /// integers.
    pub fn from_json(doc: &Value) -> Result<Self> {
        let doc: SpectralJson = serde_json::from_value(doc.clone())
            .map_err(|e| Error::InvalidInput(format!("spectral data: {e}")))?;
        let index: BTreeMap<&str, usize> = doc
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        if index.len() != doc.vertices.len() {
            return Err(Error::InvalidInput("duplicate vertex in spectral data".into()));
        }
        let k = doc.vertices.len();
        let mut counts = vec![vec![vec![BigInt::zero(); k]; k]; doc.depth + 1];
        for e in &doc.table {
            let lookup = |name: &str| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| Error::UnknownVertex(name.to_string()))
            };
            let (w, v) = (lookup(&e.w)?, lookup(&e.v)?);
            if e.n > doc.depth {
                return Err(Error::InvalidInput(format!("entry at n = {} beyond N = {}", e.n, doc.depth)));
            }
            counts[e.n][w][v] = parse_count(&e.count)?;
        }
        Ok(Self {
            vertices: doc.vertices,
            depth: doc.depth,
            counts,
        })
    }
}

fn parse_count(x: &Value) -> Result<BigInt> {
    let bad = || Error::InvalidInput(format!("non-integer count {x}"));
    match x {
        Value::String(s) => s.trim().parse::<BigInt>().map_err(|_| bad()),
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad),
        _ => Err(bad()),
    }
}

/// Graph with `a_{wv} = |w E^1 v|`, after checking that the `n = 0` slice is
/// the identity and deeper slices follow `T_{n+1} = A T_n`.
pub fn reconstruct(data: &SpectralData) -> Result<DirectedMultigraph> {
    if data.depth < 1 {
        return Err(Error::InvalidInput("the n = 1 slice is required".into()));
    }
    let k = data.vertices.len();
    for (n, slice) in data.counts.iter().enumerate() {
        for (w, row) in slice.iter().enumerate() {
            for (v, c) in row.iter().enumerate() {
                if c.sign() == Sign::Minus {
                    return Err(Error::InvalidInput(format!(
                        "negative count {c} at (w = {}, v = {}, n = {n})",
                        data.vertices[w], data.vertices[v]
                    )));
                }
            }
        }
    }
    for w in 0..k {
        for v in 0..k {
            let want = BigInt::from((w == v) as u8);
            if data.counts[0][w][v] != want {
                return Err(Error::Inconsistent(format!(
                    "n = 0 slice is not the identity at ({}, {})",
                    data.vertices[w], data.vertices[v]
                )));
            }
        }
    }
    let a = &data.counts[1];
    for n in 1..data.depth {
        for w in 0..k {
            for v in 0..k {
                let expect: BigInt = (0..k).map(|u| &a[w][u] * &data.counts[n][u][v]).sum();
                if expect != data.counts[n + 1][w][v] {
                    return Err(Error::Inconsistent(format!(
                        "slice n = {} disagrees with A^n at ({}, {}): {} vs {expect}",
                        n + 1,
                        data.vertices[w],
                        data.vertices[v],
                        data.counts[n + 1][w][v]
                    )));
                }
            }
        }
    }
    let mut b = GraphBuilder::new();
    for name in &data.vertices {
        b.vertex(name.clone())?;
    }
    for (w, row) in a.iter().enumerate() {
        for (v, c) in row.iter().enumerate() {
            let m = c
                .to_u64()
                .ok_or_else(|| Error::InvalidInput(format!("multiplicity {c} out of range")))?;
            if m > 0 {
                b.edge_by_index(w, v, m);
            }
        }
    }
    Ok(b.build())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BratteliLevels {
    /// Level of each vertex.
    Levels(Vec<usize>),
    NotBratteli(String),
}

/// `level(v) = max {k <= |V| : |E^k v| != 0}` on a truncated Bratteli
/// diagram: acyclic, a single top vertex, every edge going down one level and
/// every vertex above the last level emitting an edge.
pub fn bratteli_levels(g: &DirectedMultigraph) -> Result<BratteliLevels> {
    let not = |s: String| Ok(BratteliLevels::NotBratteli(s));
    let k = g.vertex_count();
    if k == 0 {
        return not("empty graph".into());
    }
    let report = scc_decomposition(g)?;
    if let Some(c) = report.components.iter().find(|c| c.has_cycle()) {
        return not(format!("cycle through {}", g.name(c.vertices[0])));
    }
    let levels: Vec<usize> = (0..k)
        .map(|v| {
            let t = path_counts_at(g, v, k);
            (0..=k).rev().find(|&n| !t.totals[n].is_zero()).unwrap_or(0)
        })
        .collect();
    let tops: Vec<usize> = (0..k).filter(|&v| levels[v] == 0).collect();
    if tops.len() != 1 {
        return not(format!("{} top vertices", tops.len()));
    }
    for (u, w, _) in g.edges() {
        if levels[w] != levels[u] + 1 {
            return not(format!(
                "edge {} -> {} skips from level {} to {}",
                g.name(u),
                g.name(w),
                levels[u],
                levels[w]
            ));
        }
    }
    let last = *levels.iter().max().unwrap();
    if let Some(v) = (0..k).find(|&v| levels[v] < last && g.successors(v).is_empty()) {
        return not(format!("{} at level {} emits no edge", g.name(v), levels[v]));
    }
    Ok(BratteliLevels::Levels(levels))
}

/// Exact multigraph isomorphism by backtracking over fingerprint classes.
pub fn isomorphic(g: &DirectedMultigraph, h: &DirectedMultigraph) -> Result<bool> {
    for x in [g, h] {
        if x.vertex_count() > ISO_CAP {
            return Err(Error::SizeCap {
                size: x.vertex_count(),
                cap: ISO_CAP,
            });
        }
    }
    let k = g.vertex_count();
    if k != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    // Backward series plus forward series of the reversed graph, plus loops.
    let key = |x: &DirectedMultigraph| -> Vec<(Vec<BigUint>, Vec<BigUint>, u64)> {
        let rev = reversed(x);
        let f = fingerprint(x, k);
        let r = fingerprint(&rev, k);
        (0..k)
            .map(|v| (f.series[v].clone(), r.series[v].clone(), x.multiplicity(v, v)))
            .collect()
    };
    let (kg, kh) = (key(g), key(h));
    let mut sg = kg.clone();
    let mut sh = kh.clone();
    sg.sort();
    sh.sort();
    if sg != sh {
        return Ok(false);
    }
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|v| (0..k).filter(|&u| kh[u] == kg[v]).collect())
        .collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| candidates[v].len());
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; k];
    Ok(extend(g, h, &order, &candidates, &mut map, &mut used, 0))
}

fn reversed(g: &DirectedMultigraph) -> DirectedMultigraph {
    let mut b = GraphBuilder::new();
    for name in g.names() {
        b.vertex(name.clone()).expect("names already unique");
    }
    for (u, w, m) in g.edges() {
        b.edge_by_index(w, u, m);
    }
    b.build()
}

fn extend(
    g: &DirectedMultigraph,
    h: &DirectedMultigraph,
    order: &[usize],
    candidates: &[Vec<usize>],
    map: &mut [usize],
    used: &mut [bool],
    depth: usize,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for &u in &candidates[v] {
        if used[u] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p| {
            g.multiplicity(v, p) == h.multiplicity(u, map[p])
                && g.multiplicity(p, v) == h.multiplicity(map[p], u)
        }) && g.multiplicity(v, v) == h.multiplicity(u, u);
        if !consistent {
            continue;
        }
        map[v] = u;
        used[u] = true;
        if extend(g, h, order, candidates, map, used, depth + 1) {
            return true;
        }
        used[u] = false;
        map[v] = usize::MAX;
    }
    false
}
