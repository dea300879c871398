//! Directed multigraphs, edge-list ingestion and exact path counting.
//!
//! A path of length `n` ending at `v` is a sequence of edges
//! `e_0 e_1 ... e_{n-1}` with `r(e_i) = s(e_{i+1})` and `r(e_{n-1}) = v`.
//! Length-zero paths are the vertices themselves. Parallel edges are stored
//! as multiplicities and distinguished by index when paths are enumerated.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of paths [`enumerate_paths`] will produce.
pub const DEFAULT_PATH_CAP: usize = 1_000_000;

/// Finite directed graph with edge multiplicities.
///
/// Vertices keep their declaration order, which fixes matrix indices.
#[derive(Debug, Clone)]
pub struct DirectedMultigraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeMap<(usize, usize), u64>,
    out: Vec<Vec<(usize, u64)>>,
    inc: Vec<Vec<(usize, u64)>>,
}

impl PartialEq for DirectedMultigraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for DirectedMultigraph {}

#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeMap<(usize, usize), u64>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a vertex. Returns its index; redeclaring is an error.
    pub fn vertex(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidInput(format!("invalid vertex id `{name}`")));
        }
        if self.index.contains_key(&name) {
            return Err(Error::InvalidInput(format!("vertex `{name}` declared twice")));
        }
        let id = self.names.len();
        self.index.insert(name.clone(), id);
        self.names.push(name);
        Ok(id)
    }

    /// Adds `mult` parallel edges from `src` to `dst`; repeats accumulate.
    pub fn edge(&mut self, src: &str, dst: &str, mult: u64) -> Result<()> {
        let s = *self
            .index
            .get(src)
            .ok_or_else(|| Error::UnknownVertex(src.to_string()))?;
        let d = *self
            .index
            .get(dst)
            .ok_or_else(|| Error::UnknownVertex(dst.to_string()))?;
        self.edge_by_index(s, d, mult);
        Ok(())
    }

    pub(crate) fn edge_by_index(&mut self, src: usize, dst: usize, mult: u64) {
        if mult > 0 {
            *self.edges.entry((src, dst)).or_insert(0) += mult;
        }
    }

    pub fn build(self) -> DirectedMultigraph {
        let n = self.names.len();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (&(s, d), &m) in &self.edges {
            out[s].push((d, m));
            inc[d].push((s, m));
        }
        DirectedMultigraph {
            names: self.names,
            index: self.index,
            edges: self.edges,
            out,
            inc,
        }
    }
}

impl DirectedMultigraph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::new()
    }

    /// Builds a graph from vertex names and a square multiplicity matrix
    /// (`matrix[s][d]` edges from `s` to `d`).
    pub fn from_matrix<S: AsRef<str>>(names: &[S], matrix: &[Vec<u64>]) -> Result<Self> {
        if matrix.len() != names.len() || matrix.iter().any(|row| row.len() != names.len()) {
            return Err(Error::InvalidInput("matrix shape does not match vertex count".into()));
        }
        let mut b = GraphBuilder::new();
        for name in names {
            b.vertex(name.as_ref())?;
        }
        for (s, row) in matrix.iter().enumerate() {
            for (d, &m) in row.iter().enumerate() {
                b.edge_by_index(s, d, m);
            }
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges.values().sum()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Multiplicity `a_{src,dst}`.
    pub fn multiplicity(&self, src: usize, dst: usize) -> u64 {
        self.edges.get(&(src, dst)).copied().unwrap_or(0)
    }

    /// Distinct `(src, dst, multiplicity)` triples in lexicographic index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.edges.iter().map(|(&(s, d), &m)| (s, d, m))
    }

    pub fn successors(&self, v: usize) -> &[(usize, u64)] {
        &self.out[v]
    }

    pub fn predecessors(&self, v: usize) -> &[(usize, u64)] {
        &self.inc[v]
    }

    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.vertex_count();
        let mut a = vec![vec![0; n]; n];
        for (s, d, m) in self.edges() {
            a[s][d] = m;
        }
        a
    }

    /// Indices of the given names, sorted and deduplicated.
    pub fn indices_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        let set: BTreeSet<usize> = names
            .iter()
            .map(|n| self.index_of(n.as_ref()))
            .collect::<Result<_>>()?;
        Ok(set.into_iter().collect())
    }

    pub fn names_of(&self, ids: &[usize]) -> Vec<String> {
        ids.iter().map(|&i| self.names[i].clone()).collect()
    }

    /// Renders the graph in the line-based edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for name in &self.names {
            s.push_str("vertex ");
            s.push_str(name);
            s.push('\n');
        }
        for (a, b, m) in self.edges() {
            s.push_str(&format!("edge {} {} {}\n", self.names[a], self.names[b], m));
        }
        s
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.names.clone(),
            edges: self
                .edges()
                .map(|(s, d, m)| EdgeJson {
                    from: self.names[s].clone(),
                    to: self.names[d].clone(),
                    mult: m,
                })
                .collect(),
        }
    }
}

/// JSON mirror of the edge-list format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: String,
    pub to: String,
    #[serde(default = "one")]
    pub mult: u64,
}

fn one() -> u64 {
    1
}

impl TryFrom<GraphJson> for DirectedMultigraph {
    type Error = Error;

    fn try_from(doc: GraphJson) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for v in doc.vertices {
            b.vertex(v)?;
        }
        for e in doc.edges {
            if e.mult == 0 {
                return Err(Error::InvalidInput(format!(
                    "edge {} -> {} has nonpositive multiplicity",
                    e.from, e.to
                )));
            }
            b.edge(&e.from, &e.to, e.mult)?;
        }
        Ok(b.build())
    }
}

/// Parses the line-based edge-list format:
///
/// ```text
/// # comment
/// vertex v
/// vertex w
/// edge v w 2
/// ```
pub fn parse_graph(text: &str) -> Result<DirectedMultigraph> {
    let mut b = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| Error::Parse { line, message };
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", id] => {
                b.vertex(*id).map_err(|e| err(e.to_string()))?;
            }
            ["edge", src, dst, rest @ ..] => {
                let mult = match rest {
                    [] => 1,
                    [m] => {
                        let m: i128 = m
                            .parse()
                            .map_err(|_| err(format!("multiplicity `{m}` is not an integer")))?;
                        if m <= 0 {
                            return Err(err(format!("nonpositive multiplicity {m}")));
                        }
                        u64::try_from(m).map_err(|_| err(format!("multiplicity {m} too large")))?
                    }
                    _ => return Err(err("trailing tokens after multiplicity".into())),
                };
                b.edge(src, dst, mult).map_err(|e| match e {
                    Error::UnknownVertex(v) => err(format!("undeclared vertex `{v}`")),
                    other => err(other.to_string()),
                })?;
            }
            _ => return Err(err(format!("malformed line `{content}`"))),
        }
    }
    Ok(b.build())
}

/// Parses either the JSON mirror (document starting with `{`) or the
/// edge-list format.
pub fn parse_any(text: &str) -> Result<DirectedMultigraph> {
    if text.trim_start().starts_with('{') {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        DirectedMultigraph::try_from(doc)
    } else {
        parse_graph(text)
    }
}

/// Exact counts `|w E^n v|` for a fixed target `v` and `n <= depth`.
#[derive(Debug, Clone, PartialEq)]
pub struct PathCountTable {
    pub base: usize,
    pub depth: usize,
    /// `counts[n][w] = |w E^n v|`
    pub counts: Vec<Vec<BigUint>>,
    /// `totals[n] = |E^n v|`
    pub totals: Vec<BigUint>,
}

impl PathCountTable {
    pub fn count(&self, n: usize, w: usize) -> &BigUint {
        &self.counts[n][w]
    }
}

pub fn path_counts(g: &DirectedMultigraph, v: &str, depth: usize) -> Result<PathCountTable> {
    let v = g.index_of(v)?;
    Ok(path_counts_at(g, v, depth))
}

pub(crate) fn path_counts_at(g: &DirectedMultigraph, v: usize, depth: usize) -> PathCountTable {
    let n = g.vertex_count();
    let mut current = vec![BigUint::zero(); n];
    current[v] = BigUint::one();
    let mut counts = Vec::with_capacity(depth + 1);
    let mut totals = Vec::with_capacity(depth + 1);
    for step in 0..=depth {
        totals.push(current.iter().sum());
        if step == depth {
            counts.push(current);
            break;
        }
        let next: Vec<BigUint> = (0..n)
            .map(|w| {
                g.successors(w)
                    .iter()
                    .fold(BigUint::zero(), |acc, &(u, m)| acc + &current[u] * m)
            })
            .collect();
        counts.push(std::mem::replace(&mut current, next));
    }
    PathCountTable {
        base: v,
        depth,
        counts,
        totals,
    }
}

/// One parallel edge: `index` ranges over `0..multiplicity(src, dst)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef {
    pub src: usize,
    pub dst: usize,
    pub index: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub range: usize,
    pub edges: Vec<EdgeRef>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Lists every path of length `<= depth` ending at `v`, failing once more
/// than `cap` paths would be produced.
pub fn enumerate_paths(
    g: &DirectedMultigraph,
    v: &str,
    depth: usize,
    cap: usize,
) -> Result<Vec<Path>> {
    let v = g.index_of(v)?;
    enumerate_paths_at(g, v, depth, cap)
}

pub(crate) fn enumerate_paths_at(
    g: &DirectedMultigraph,
    v: usize,
    depth: usize,
    cap: usize,
) -> Result<Vec<Path>> {
    let mut out = Vec::new();
    let mut frontier = vec![Path {
        source: v,
        range: v,
        edges: Vec::new(),
    }];
    for level in 0..=depth {
        if out.len() + frontier.len() > cap {
            return Err(Error::PathCapExceeded { cap });
        }
        if level == depth {
            out.append(&mut frontier);
            break;
        }
        let mut next = Vec::new();
        for path in &frontier {
            for &(pred, mult) in g.predecessors(path.source) {
                for index in 0..mult {
                    if out.len() + frontier.len() + next.len() >= cap {
                        return Err(Error::PathCapExceeded { cap });
                    }
                    let mut edges = Vec::with_capacity(path.edges.len() + 1);
                    edges.push(EdgeRef {
                        src: pred,
                        dst: path.source,
                        index,
                    });
                    edges.extend_from_slice(&path.edges);
                    next.push(Path {
                        source: pred,
                        range: v,
                        edges,
                    });
                }
            }
        }
        out.append(&mut frontier);
        frontier = next;
    }
    Ok(out)
}

/// `true` iff some path runs from `u` to `v` (always true for `u == v`).
pub fn reaches(g: &DirectedMultigraph, u: &str, v: &str) -> Result<bool> {
    let (u, v) = (g.index_of(u)?, g.index_of(v)?);
    Ok(forward_closure(g, &[u])[v])
}

pub(crate) fn forward_closure(g: &DirectedMultigraph, seeds: &[usize]) -> Vec<bool> {
    closure(g.vertex_count(), seeds, |x| g.successors(x))
}

pub(crate) fn backward_closure(g: &DirectedMultigraph, seeds: &[usize]) -> Vec<bool> {
    closure(g.vertex_count(), seeds, |x| g.predecessors(x))
}

fn closure<'a>(
    n: usize,
    seeds: &[usize],
    next: impl Fn(usize) -> &'a [(usize, u64)],
) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &s in seeds {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &(y, _) in next(x) {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Least hereditary superset of `set`: everything reachable from it.
pub fn hereditary_closure<S: AsRef<str>>(g: &DirectedMultigraph, set: &[S]) -> Result<Vec<String>> {
    let seeds = g.indices_of(set)?;
    let seen = forward_closure(g, &seeds);
    Ok((0..g.vertex_count())
        .filter(|&i| seen[i])
        .map(|i| g.names[i].clone())
        .collect())
}

/// Subgraph on `set` keeping the edges with both endpoints inside.
pub fn restrict<S: AsRef<str>>(g: &DirectedMultigraph, set: &[S]) -> Result<DirectedMultigraph> {
    let keep = g.indices_of(set)?;
    Ok(restrict_indices(g, &keep))
}

pub(crate) fn restrict_indices(g: &DirectedMultigraph, keep: &[usize]) -> DirectedMultigraph {
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut local = vec![usize::MAX; g.vertex_count()];
    let mut b = GraphBuilder::new();
    for (i, &v) in sorted.iter().enumerate() {
        local[v] = i;
        b.vertex(g.names[v].clone()).expect("names are unique");
    }
    for (s, d, m) in g.edges() {
        if local[s] != usize::MAX && local[d] != usize::MAX {
            b.edge_by_index(local[s], local[d], m);
        }
    }
    b.build()
}
