//! Strongly connected components, per-component spectral radius and period,
//! and critical inverse temperatures.
//!
//! The critical inverse temperature of `v` is the largest `log rho(A_C)` over
//! components `C` that contain a cycle and reach `v`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::DirectedMultigraph;
use crate::settings::Settings;

/// Spectral radius of a component together with a bound on its error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusEstimate {
    pub value: f64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    /// Vertex indices in ascending order.
    pub vertices: Vec<usize>,
    /// Single vertex without a loop.
    pub trivial: bool,
    pub radius: RadiusEstimate,
    /// gcd of cycle lengths; `None` for a component without cycles.
    pub period: Option<u64>,
    /// Right Perron vector of `A_C`, indexed like `vertices`, summing to 1.
    pub perron: Vec<f64>,
}

impl Component {
    pub fn has_cycle(&self) -> bool {
        !self.trivial
    }

    /// `log rho(A_C)`, `-inf` for trivial components.
    pub fn beta(&self) -> f64 {
        if self.trivial {
            f64::NEG_INFINITY
        } else {
            self.radius.value.ln()
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Components are listed in a topological order of the condensation
/// (a component precedes everything it reaches), ties broken by smallest
/// vertex index.
#[derive(Debug, Clone, PartialEq)]
pub struct SccReport {
    pub components: Vec<Component>,
    pub component_of: Vec<usize>,
    /// Direct condensation edges `C -> C'`.
    pub successors: Vec<Vec<usize>>,
    reach: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalTemperature {
    /// `-inf` when no cycle reaches the vertex.
    pub value: f64,
    /// Component attaining the maximum.
    pub witness: Option<usize>,
    /// Error bound on `value` inherited from the radius estimate.
    pub error: f64,
}

impl CriticalTemperature {
    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }
}

impl SccReport {
    /// `C E^* C' != {}` (reflexive).
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        self.reach[from][to]
    }

    pub fn component(&self, v: usize) -> &Component {
        &self.components[self.component_of[v]]
    }

    pub fn critical_temperature(&self, v: usize) -> CriticalTemperature {
        let target = self.component_of[v];
        let mut best = CriticalTemperature {
            value: f64::NEG_INFINITY,
            witness: None,
            error: 0.0,
        };
        for (i, c) in self.components.iter().enumerate() {
            if c.has_cycle() && self.reach[i][target] && c.beta() > best.value {
                best = CriticalTemperature {
                    value: c.beta(),
                    witness: Some(i),
                    error: c.radius.error / c.radius.value,
                };
            }
        }
        best
    }

    /// `rho(A_E)` as the maximum of the component radii.
    pub fn spectral_radius(&self) -> RadiusEstimate {
        self.components
            .iter()
            .map(|c| c.radius)
            .fold(RadiusEstimate { value: 0.0, error: 0.0 }, |best, r| {
                if r.value > best.value {
                    r
                } else {
                    best
                }
            })
    }

    /// Index of the component containing every vertex in `names`, if they
    /// form exactly one component.
    pub fn find_component(&self, g: &DirectedMultigraph, names: &[&str]) -> Result<usize> {
        let ids = g.indices_of(names)?;
        let c = self.component_of[ids[0]];
        if self.components[c].vertices == ids {
            Ok(c)
        } else {
            Err(Error::InvalidInput(format!(
                "{names:?} is not a strongly connected component"
            )))
        }
    }
}

pub fn scc_decomposition(g: &DirectedMultigraph) -> Result<SccReport> {
    scc_decomposition_with(g, &Settings::default())
}

pub fn scc_decomposition_with(g: &DirectedMultigraph, settings: &Settings) -> Result<SccReport> {
    let raw = tarjan(g);
    let n = g.vertex_count();
    let mut raw_of = vec![0; n];
    for (i, comp) in raw.iter().enumerate() {
        for &v in comp {
            raw_of[v] = i;
        }
    }

    // Kahn's algorithm over the condensation, smallest vertex first.
    let k = raw.len();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut indeg = vec![0usize; k];
    for (s, d, _) in g.edges() {
        let (a, b) = (raw_of[s], raw_of[d]);
        if a != b && !succ[a].contains(&b) {
            succ[a].push(b);
            indeg[b] += 1;
        }
    }
    let min_vertex: Vec<usize> = raw.iter().map(|c| *c.iter().min().unwrap()).collect();
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..k)
        .filter(|&c| indeg[c] == 0)
        .map(|c| Reverse((min_vertex[c], c)))
        .collect();
    let mut order = Vec::with_capacity(k);
    while let Some(Reverse((_, c))) = heap.pop() {
        order.push(c);
        for &d in &succ[c] {
            indeg[d] -= 1;
            if indeg[d] == 0 {
                heap.push(Reverse((min_vertex[d], d)));
            }
        }
    }
    let mut renumber = vec![0; k];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new;
    }

    let component_of: Vec<usize> = raw_of.iter().map(|&c| renumber[c]).collect();
    let mut successors = vec![Vec::new(); k];
    for (old, list) in succ.iter().enumerate() {
        let mut mapped: Vec<usize> = list.iter().map(|&d| renumber[d]).collect();
        mapped.sort_unstable();
        successors[renumber[old]] = mapped;
    }

    // Transitive closure, processed in reverse topological order.
    let mut reach = vec![vec![false; k]; k];
    for c in (0..k).rev() {
        reach[c][c] = true;
        for &d in &successors[c] {
            for x in 0..k {
                if reach[d][x] {
                    reach[c][x] = true;
                }
            }
        }
    }

    let mut components = Vec::with_capacity(k);
    for &old in &order {
        let mut vertices = raw[old].clone();
        vertices.sort_unstable();
        components.push(analyse_component(g, vertices, settings)?);
    }

    Ok(SccReport {
        components,
        component_of,
        successors,
        reach,
    })
}

/// Iterative Tarjan; components come out sinks first.
fn tarjan(g: &DirectedMultigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0;

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            let succ = g.successors(v);
            if *next < succ.len() {
                let w = succ[*next].0;
                *next += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

fn analyse_component(
    g: &DirectedMultigraph,
    vertices: Vec<usize>,
    settings: &Settings,
) -> Result<Component> {
    let trivial = vertices.len() == 1 && g.multiplicity(vertices[0], vertices[0]) == 0;
    if trivial {
        return Ok(Component {
            vertices,
            trivial,
            radius: RadiusEstimate { value: 0.0, error: 0.0 },
            period: None,
            perron: vec![1.0],
        });
    }
    let period = Some(component_period(g, &vertices));
    let (radius, perron) = perron_pair(g, &vertices, settings)?;
    Ok(Component {
        vertices,
        trivial,
        radius,
        period,
        perron,
    })
}

/// Spectral radius of `A_C`. Trivial components give 0.
pub fn spectral_radius(
    g: &DirectedMultigraph,
    component: &[usize],
    settings: &Settings,
) -> Result<RadiusEstimate> {
    if component.len() == 1 && g.multiplicity(component[0], component[0]) == 0 {
        return Ok(RadiusEstimate { value: 0.0, error: 0.0 });
    }
    perron_pair(g, component, settings).map(|(r, _)| r)
}

/// Perron root and right Perron vector (sum 1) of a nontrivial strongly
/// connected block.
fn perron_pair(
    g: &DirectedMultigraph,
    vertices: &[usize],
    settings: &Settings,
) -> Result<(RadiusEstimate, Vec<f64>)> {
    let k = vertices.len();
    let local = |v: usize| vertices.binary_search(&v).ok();

    if k == 1 {
        let m = g.multiplicity(vertices[0], vertices[0]) as f64;
        return Ok((RadiusEstimate { value: m, error: 0.0 }, vec![1.0]));
    }

    // A single cycle: every vertex has exactly one successor inside.
    let inner: Vec<Vec<(usize, u64)>> = vertices
        .iter()
        .map(|&v| {
            g.successors(v)
                .iter()
                .filter_map(|&(w, m)| local(w).map(|i| (i, m)))
                .collect()
        })
        .collect();
    if inner.iter().all(|s| s.len() == 1) {
        let product: f64 = inner.iter().map(|s| s[0].1 as f64).product();
        let rho = if inner.iter().all(|s| s[0].1 == 1) {
            1.0
        } else {
            product.powf(1.0 / k as f64)
        };
        let mut x = vec![0.0; k];
        let mut cur = 0;
        x[0] = 1.0;
        for _ in 1..k {
            let (next, m) = inner[cur][0];
            x[next] = rho * x[cur] / m as f64;
            cur = next;
        }
        normalize(&mut x);
        return Ok((RadiusEstimate { value: rho, error: 0.0 }, x));
    }

    // Power iteration on A + I; the shift makes the block primitive.
    let mut x = vec![1.0 / k as f64; k];
    let mut y = vec![0.0; k];
    let (mut lo, mut hi) = (0.0, f64::INFINITY);
    for _ in 0..settings.max_iter {
        for (i, row) in inner.iter().enumerate() {
            y[i] = x[i] + row.iter().map(|&(j, m)| m as f64 * x[j]).sum::<f64>();
        }
        lo = f64::INFINITY;
        hi = 0.0f64;
        for i in 0..k {
            let q = y[i] / x[i];
            lo = lo.min(q);
            hi = hi.max(q);
        }
        std::mem::swap(&mut x, &mut y);
        normalize(&mut x);
        if hi - lo <= settings.radius_tol * hi {
            return Ok((
                RadiusEstimate {
                    value: 0.5 * (lo + hi) - 1.0,
                    error: 0.5 * (hi - lo),
                },
                x,
            ));
        }
    }
    Err(Error::NonConvergence {
        iterations: settings.max_iter,
        lower: lo - 1.0,
        upper: hi - 1.0,
    })
}

fn normalize(x: &mut [f64]) {
    let s: f64 = x.iter().sum();
    for v in x.iter_mut() {
        *v /= s;
    }
}

/// gcd of cycle lengths inside a strongly connected vertex set, via BFS
/// levels: `gcd(level(u) + 1 - level(w))` over inner edges `u -> w`.
pub fn period(g: &DirectedMultigraph, component: &[usize]) -> Result<u64> {
    let mut sorted = component.to_vec();
    sorted.sort_unstable();
    let has_edge = sorted.iter().any(|&v| {
        g.successors(v)
            .iter()
            .any(|&(w, _)| sorted.binary_search(&w).is_ok())
    });
    if !has_edge {
        return Err(Error::NoCycle {
            component: g.names_of(&sorted),
        });
    }
    Ok(component_period(g, &sorted))
}

fn component_period(g: &DirectedMultigraph, vertices: &[usize]) -> u64 {
    let local = |v: usize| vertices.binary_search(&v).ok();
    let mut level = vec![i64::MIN; vertices.len()];
    level[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for &(w, _) in g.successors(vertices[i]) {
            if let Some(j) = local(w) {
                if level[j] == i64::MIN {
                    level[j] = level[i] + 1;
                    queue.push_back(j);
                }
            }
        }
    }
    let mut s: i64 = 0;
    for (i, &v) in vertices.iter().enumerate() {
        for &(w, _) in g.successors(v) {
            if let Some(j) = local(w) {
                s = s.gcd(&(level[i] + 1 - level[j]));
            }
        }
    }
    s.unsigned_abs()
}

pub fn critical_temperature(g: &DirectedMultigraph, v: &str) -> Result<CriticalTemperature> {
    let v = g.index_of(v)?;
    Ok(scc_decomposition(g)?.critical_temperature(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::parse_graph;

    #[test]
    fn loop_chain_components() {
        let g = fixtures::loop_chain();
        let r = scc_decomposition(&g).unwrap();
        assert_eq!(r.components.len(), 2);
        assert_eq!(r.components[0].vertices, [0]);
        assert_eq!(r.components[1].vertices, [1]);
        assert_eq!(r.successors, vec![vec![1], vec![]]);
        assert!(r.reaches(0, 1) && !r.reaches(1, 0));
        assert_eq!(r.components[1].radius.value, 3.0);
        assert_eq!(r.components[0].period, Some(1));
        let bv = r.critical_temperature(0);
        let bw = r.critical_temperature(1);
        assert!((bv.value - 2f64.ln()).abs() < 1e-12);
        assert!((bw.value - 3f64.ln()).abs() < 1e-12);
        assert_eq!(bw.witness, Some(1));
    }

    #[test]
    fn four_component_reachability() {
        let g = fixtures::four_components();
        let r = scc_decomposition(&g).unwrap();
        assert_eq!(r.components.len(), 4);
        let [green, orange, blue, red] = fixtures::four_components_parts();
        let id = |p: &[&str]| r.find_component(&g, p).unwrap();
        let (cg, co, cb, cr) = (id(&green), id(&orange), id(&blue), id(&red));
        for (a, b) in [(cb, co), (cb, cr), (cr, cg), (co, cg), (cb, cg)] {
            assert!(r.reaches(a, b));
            assert!(!r.reaches(b, a));
        }
        assert!(!r.reaches(co, cr) && !r.reaches(cr, co));
        assert_eq!(r.components[cg].period, Some(3));
        assert_eq!(r.components[cb].period, Some(4));
        assert!((r.components[cb].radius.value - 8f64.powf(0.25)).abs() < 1e-9);
        assert!((r.components[cr].radius.value - 4f64.cbrt()).abs() < 1e-9);
        assert!((r.components[cg].radius.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn three_cycle_and_dag() {
        let g = parse_graph("vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge c a\n").unwrap();
        let r = scc_decomposition(&g).unwrap();
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].radius.value, 1.0);
        assert_eq!(r.components[0].period, Some(3));

        let g = parse_graph("vertex a\nvertex b\nvertex c\nedge a b\nedge b c\n").unwrap();
        let r = scc_decomposition(&g).unwrap();
        assert!(r.components.iter().all(|c| c.trivial && c.period.is_none()));
        assert_eq!(r.critical_temperature(2).value, f64::NEG_INFINITY);
        assert!(matches!(period(&g, &[0]), Err(Error::NoCycle { .. })));
    }

    #[test]
    fn power_iteration_matches_known_radius() {
        // [[1,1],[1,0]] has radius the golden ratio; period 1 thanks to the loop.
        let g = DirectedMultigraph::from_matrix(&["a", "b"], &[vec![1, 1], vec![1, 0]]).unwrap();
        let r = scc_decomposition(&g).unwrap();
        let c = &r.components[0];
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((c.radius.value - phi).abs() < 1e-11);
        assert!(c.radius.error < 1e-11);
        assert_eq!(c.period, Some(1));

        // Bipartite block with period 2: a <-> b doubled one way.
        let g = DirectedMultigraph::from_matrix(&["a", "b", "c"], &[vec![0, 2, 1], vec![1, 0, 0], vec![1, 0, 0]]).unwrap();
        let r = scc_decomposition(&g).unwrap();
        let c = &r.components[0];
        assert!((c.radius.value - 3f64.sqrt()).abs() < 1e-11);
        assert_eq!(c.period, Some(2));
    }

    #[test]
    fn non_convergence_reports_bracket() {
        let g = DirectedMultigraph::from_matrix(&["a", "b"], &[vec![1, 1], vec![1, 0]]).unwrap();
        let settings = Settings {
            max_iter: 2,
            ..Settings::default()
        };
        match scc_decomposition_with(&g, &settings) {
            Err(Error::NonConvergence { lower, upper, .. }) => {
                let phi = (1.0 + 5f64.sqrt()) / 2.0;
                assert!(lower <= phi && phi <= upper);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }
}
