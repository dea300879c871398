//! KMS classification data for finite graphs.
//!
//! At inverse temperature `beta > 0` the extremal type I states are indexed by
//! the `beta`-regular vertices (`beta > beta_v`, partition value `Z_v(beta)`),
//! and the remaining extremal states by minimal components `C` with
//! `beta_C = beta`, each carrying `lambda = rho(A_C)^{-s}` for the period `s`
//! and a normalized `beta`-harmonic vector.

use nalgebra::{DMatrix, DVector};
use num_bigint::BigUint;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{path_counts_at, DirectedMultigraph};
use crate::series::partition_value_with;
use crate::settings::Settings;
use crate::spectral::{scc_decomposition_with, SccReport};

/// Per-coordinate residual allowed for a harmonic vector.
pub const HARMONIC_RESIDUAL: f64 = 1e-9;

/// Tail tolerance used for the partition values in a classification.
pub const PARTITION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusOrder {
    Less,
    Tie,
    Greater,
}

/// Compares radii with relative tolerance `tol`.
pub fn compare_radii(a: f64, b: f64, tol: f64) -> RadiusOrder {
    if (a - b).abs() <= tol * a.abs().max(b.abs()) {
        RadiusOrder::Tie
    } else if a < b {
        RadiusOrder::Less
    } else {
        RadiusOrder::Greater
    }
}

/// Nonnegative `chi` with `sum_w a_{vw} chi_w = e^beta chi_v`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicVector {
    pub beta: f64,
    /// Indexed by vertex.
    pub entries: Vec<f64>,
    pub normalized: bool,
}

impl HarmonicVector {
    /// `max_v |sum_w a_{vw} chi_w - e^beta chi_v|`.
    pub fn residual(&self, g: &DirectedMultigraph) -> f64 {
        let eb = self.beta.exp();
        (0..g.vertex_count())
            .map(|v| {
                let lhs: f64 = g
                    .successors(v)
                    .iter()
                    .map(|&(w, m)| m as f64 * self.entries[w])
                    .sum();
                (lhs - eb * self.entries[v]).abs()
            })
            .fold(0.0, f64::max)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&v| self.entries[v] > 0.0)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinimalComponents {
    pub components: Vec<usize>,
    /// Near-tie notices from radius comparisons.
    pub warnings: Vec<String>,
}

/// Components `C` with `rho(A_C) > 1` such that every other component reaching
/// `C` has strictly smaller radius. Radii equal within tolerance count as
/// equal, which excludes `C`.
pub fn minimal_components(
    g: &DirectedMultigraph,
    report: &SccReport,
    settings: &Settings,
) -> MinimalComponents {
    let mut components = Vec::new();
    let mut warnings = Vec::new();
    for (ci, c) in report.components.iter().enumerate() {
        if c.trivial || compare_radii(c.radius.value, 1.0, settings.compare_tol) != RadiusOrder::Greater {
            continue;
        }
        let mut minimal = true;
        for (di, d) in report.components.iter().enumerate() {
            if di == ci || !report.reaches(di, ci) {
                continue;
            }
            match compare_radii(d.radius.value, c.radius.value, settings.compare_tol) {
                RadiusOrder::Less => {}
                RadiusOrder::Tie => {
                    warnings.push(format!(
                        "radii of {:?} and {:?} agree within {}; treated as equal",
                        g.names_of(&d.vertices),
                        g.names_of(&c.vertices),
                        settings.compare_tol
                    ));
                    minimal = false;
                }
                RadiusOrder::Greater => minimal = false,
            }
        }
        if minimal {
            components.push(ci);
        }
    }
    MinimalComponents {
        components,
        warnings,
    }
}

/// `{v : beta > beta_v}`. Errors when `beta` sits inside the criticality band
/// of some vertex.
pub fn beta_regular_vertices(
    g: &DirectedMultigraph,
    report: &SccReport,
    beta: f64,
    settings: &Settings,
) -> Result<Vec<usize>> {
    if !(beta > 0.0) {
        return Err(Error::Unsupported(format!("beta = {beta}; only beta > 0 is classified")));
    }
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        let crit = report.critical_temperature(v);
        if let Some(c) = crit.witness {
            if (beta - crit.value).abs() <= settings.beta_band + crit.error {
                return Err(Error::AtCriticality {
                    beta,
                    critical: crit.value,
                    band: settings.beta_band,
                    component: g.names_of(&report.components[c].vertices),
                });
            }
        }
        if beta > crit.value {
            out.push(v);
        }
    }
    Ok(out)
}

/// Normalized harmonic vector at `beta_C` for a minimal component `C`:
/// the Perron vector on `C`, block back-substitution on the components that
/// reach `C`, zero elsewhere.
pub fn harmonic_vector_for_component(
    g: &DirectedMultigraph,
    report: &SccReport,
    ci: usize,
    settings: &Settings,
) -> Result<HarmonicVector> {
    let c = &report.components[ci];
    let pmc = minimal_components(g, report, settings);
    if !pmc.components.contains(&ci) {
        let tie = report.components.iter().enumerate().find(|(di, d)| {
            *di != ci
                && report.reaches(*di, ci)
                && compare_radii(d.radius.value, c.radius.value, settings.compare_tol)
                    == RadiusOrder::Tie
        });
        return Err(match tie {
            Some((_, d)) => Error::NearTie {
                first: g.names_of(&d.vertices),
                second: g.names_of(&c.vertices),
            },
            None => Error::NotMinimal {
                component: g.names_of(&c.vertices),
            },
        });
    }

    let eb = c.radius.value;
    let mut chi = vec![0.0; g.vertex_count()];
    for (i, &v) in c.vertices.iter().enumerate() {
        chi[v] = c.perron[i];
    }
    // Components reaching C precede it in topological order.
    for di in (0..ci).rev() {
        if !report.reaches(di, ci) {
            continue;
        }
        let d = &report.components[di];
        let k = d.vertices.len();
        let mut m = DMatrix::<f64>::identity(k, k) * eb;
        let mut rhs = DVector::<f64>::zeros(k);
        for (i, &v) in d.vertices.iter().enumerate() {
            for &(w, mult) in g.successors(v) {
                match d.vertices.binary_search(&w) {
                    Ok(j) => m[(i, j)] -= mult as f64,
                    Err(_) => rhs[i] += mult as f64 * chi[w],
                }
            }
        }
        let x = m
            .lu()
            .solve(&rhs)
            .ok_or_else(|| Error::Numerical("singular block in harmonic solve".into()))?;
        for (i, &v) in d.vertices.iter().enumerate() {
            if x[i] < -1e-12 {
                return Err(Error::Numerical(format!(
                    "negative harmonic entry {} at {}",
                    x[i],
                    g.name(v)
                )));
            }
            chi[v] = x[i].max(0.0);
        }
    }
    let total: f64 = chi.iter().sum();
    for x in chi.iter_mut() {
        *x /= total;
    }
    let h = HarmonicVector {
        beta: c.beta(),
        entries: chi,
        normalized: true,
    };
    let residual = h.residual(g);
    if residual >= HARMONIC_RESIDUAL {
        return Err(Error::Numerical(format!(
            "harmonic residual {residual} above {HARMONIC_RESIDUAL}"
        )));
    }
    Ok(h)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypeOneState {
    pub vertex: usize,
    /// `Z_v(beta)`
    pub partition: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypeThreeState {
    pub component: usize,
    pub lambda: f64,
    pub period: u64,
    pub chi: HarmonicVector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KmsClassification {
    pub beta: f64,
    pub type_one: Vec<TypeOneState>,
    pub type_three: Vec<TypeThreeState>,
    /// `sup_v Z_v(beta) < inf`, i.e. `beta > log rho(A_E)`.
    pub all_type_one: bool,
    /// Components whose critical value lies within the band around `beta`.
    pub at_criticality: Vec<usize>,
    pub warnings: Vec<String>,
}

impl KmsClassification {
    /// `{"beta", "type_I": [{"vertex", "Z"}], "type_III": [{"component",
    /// "lambda", "period", "chi"}], "all_type_I"}` with `chi` keyed by vertex
    /// name over its support.
    pub fn to_json(&self, g: &DirectedMultigraph, report: &SccReport) -> serde_json::Value {
        let type_one: Vec<_> = self
            .type_one
            .iter()
            .map(|s| json!({"vertex": g.name(s.vertex), "Z": s.partition}))
            .collect();
        let type_three: Vec<_> = self
            .type_three
            .iter()
            .map(|s| {
                let chi: serde_json::Map<String, serde_json::Value> = s
                    .chi
                    .support()
                    .into_iter()
                    .map(|v| (g.name(v).to_string(), json!(s.chi.entries[v])))
                    .collect();
                json!({
                    "component": g.names_of(&report.components[s.component].vertices),
                    "lambda": s.lambda,
                    "period": s.period,
                    "chi": chi,
                })
            })
            .collect();
        json!({
            "beta": self.beta,
            "type_I": type_one,
            "type_III": type_three,
            "all_type_I": self.all_type_one,
        })
    }
}

pub fn classify_kms(g: &DirectedMultigraph, beta: f64, settings: &Settings) -> Result<KmsClassification> {
    let report = scc_decomposition_with(g, settings)?;
    classify_kms_with(g, &report, beta, settings)
}

pub fn classify_kms_with(
    g: &DirectedMultigraph,
    report: &SccReport,
    beta: f64,
    settings: &Settings,
) -> Result<KmsClassification> {
    if !(beta > 0.0) {
        return Err(Error::Unsupported(format!(
            "beta = {beta}; only beta > 0 is classified (see negative_beta_summable_vertices)"
        )));
    }
    let near = |value: f64, err: f64| (beta - value).abs() <= settings.beta_band + err;

    let at_criticality: Vec<usize> = report
        .components
        .iter()
        .enumerate()
        .filter(|(_, c)| c.has_cycle() && near(c.beta(), c.radius.error / c.radius.value))
        .map(|(i, _)| i)
        .collect();

    let mut type_one = Vec::new();
    for v in 0..g.vertex_count() {
        let crit = report.critical_temperature(v);
        // Finite graphs diverge at beta_v itself.
        if crit.is_finite() && (beta < crit.value || near(crit.value, crit.error)) {
            continue;
        }
        let z = partition_value_with(g, report, v, beta, PARTITION_TOL, settings)?;
        type_one.push(TypeOneState {
            vertex: v,
            partition: z.value.expect("beta above beta_v"),
        });
    }

    let pmc = minimal_components(g, report, settings);
    let mut type_three = Vec::new();
    for &ci in &pmc.components {
        let c = &report.components[ci];
        if !near(c.beta(), c.radius.error / c.radius.value) {
            continue;
        }
        let period = c.period.expect("minimal components contain cycles");
        type_three.push(TypeThreeState {
            component: ci,
            lambda: c.radius.value.powi(-(period as i32)),
            period,
            chi: harmonic_vector_for_component(g, report, ci, settings)?,
        });
    }

    let rho = report.spectral_radius();
    let all_type_one = rho.value == 0.0 || {
        let crit = rho.value.ln();
        beta > crit && !near(crit, rho.error / rho.value)
    };

    let mut warnings = pmc.warnings;
    if !at_criticality.is_empty() {
        warnings.push(format!(
            "beta = {beta} is critical for {} component(s)",
            at_criticality.len()
        ));
    }
    Ok(KmsClassification {
        beta,
        type_one,
        type_three,
        all_type_one,
        at_criticality,
        warnings,
    })
}

/// Ground state of a vertex with its eigenspace dimensions
/// `rows[n][w] = |w E^n v|`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroundState {
    pub vertex: usize,
    pub rows: Vec<Vec<BigUint>>,
}

pub fn ground_states(g: &DirectedMultigraph, depth: Option<usize>) -> Vec<GroundState> {
    let depth = depth.unwrap_or(2 * g.vertex_count());
    (0..g.vertex_count())
        .map(|v| GroundState {
            vertex: v,
            rows: path_counts_at(g, v, depth).counts,
        })
        .collect()
}

/// Vertices with finitely many paths ending at them: no cycle reaches them.
pub fn negative_beta_summable_vertices(report: &SccReport) -> Vec<usize> {
    (0..report.component_of.len())
        .filter(|&v| report.critical_temperature(v).witness.is_none())
        .collect()
}
