//! Fixed-target partition functions `Z_v(beta) = sum_n |E^n v| e^{-beta n}`
//! and the path generating function `H_E(t) = sum_n |E^n| t^n`.
//!
//! Closed forms come from the column sums of `(I - tA)^{-1}`, obtained by
//! fraction-free Gauss-Jordan elimination of `(I - tA)^T y = 1` over `Z[t]`.
//! Numeric values sum the series with a tail bound derived from a positive
//! row vector `z` with `z A <= r z` (the resolvent row of `A / r`).

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{backward_closure, DirectedMultigraph};
use crate::poly::Poly;
use crate::settings::Settings;
use crate::spectral::{scc_decomposition_with, SccReport};

/// `num(t) / den(t)` with `den(0) = 1` and no common factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self {
                num,
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (
            num.div_exact(&g).expect("gcd divides numerator"),
            den.div_exact(&g).expect("gcd divides denominator"),
        );
        let c0 = den.coeff(0);
        if c0.is_zero() {
            return Err(Error::InvalidInput("denominator vanishes at t = 0".into()));
        }
        if c0.is_negative() {
            num = -num;
            den = -den;
        }
        if !den.coeff(0).is_one() {
            let c = den.content().gcd(&num.content());
            num = Poly::new(num.coeffs().iter().map(|x| x / &c).collect());
            den = Poly::new(den.coeffs().iter().map(|x| x / &c).collect());
        }
        Ok(Self { num, den })
    }

    pub fn constant(c: i64) -> Self {
        Self {
            num: Poly::from_i64(&[c]),
            den: Poly::one(),
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        let den = &self.den * &other.den;
        Self::new(num, den).expect("product of nonzero denominators")
    }

    /// First `terms` Taylor coefficients at `t = 0`.
    pub fn taylor(&self, terms: usize) -> Vec<BigInt> {
        let d0 = self.den.coeff(0);
        let mut out: Vec<BigInt> = Vec::with_capacity(terms);
        for k in 0..terms {
            let mut c = self.num.coeff(k);
            for j in 1..=k.min(self.den.degree().unwrap_or(0)) {
                c -= self.den.coeff(j) * &out[k - j];
            }
            out.push(c / &d0);
        }
        out
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    /// Smallest positive real root of the denominator, if it lies in `(0, 1]`.
    pub fn smallest_positive_pole(&self) -> Option<f64> {
        self.den.smallest_positive_root(1)
    }

    pub fn to_json(&self) -> RationalJson {
        let strs = |p: &Poly| p.coeffs().iter().map(|c| c.to_string()).collect();
        RationalJson {
            num: if self.num.is_zero() {
                vec!["0".into()]
            } else {
                strs(&self.num)
            },
            den: strs(&self.den),
        }
    }

    pub fn from_json(doc: &RationalJson) -> Result<Self> {
        let parse = |xs: &[String]| -> Result<Poly> {
            xs.iter()
                .map(|s| {
                    s.parse::<BigInt>()
                        .map_err(|_| Error::InvalidInput(format!("`{s}` is not an integer")))
                })
                .collect::<Result<Vec<_>>>()
                .map(Poly::new)
        };
        Self::new(parse(&doc.num)?, parse(&doc.den)?)
    }
}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// `{"num":[c0,c1,...],"den":[1,d1,...]}` with decimal-string coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

/// Closed forms `Z_v` for every vertex of `g`, in vertex order.
pub fn all_closed_forms(g: &DirectedMultigraph) -> Vec<RationalFunction> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    closed_forms_on(g, &all)
}

/// Solves `(I - tA_S)^T y = 1` on the vertex set `s` (which must be closed
/// under predecessors for the result to be `Z_v`).
fn closed_forms_on(g: &DirectedMultigraph, s: &[usize]) -> Vec<RationalFunction> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    // Row i of M^T: coefficient of y_j is delta_ij - t a_{j i}.
    let mut m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            let mut row: Vec<Poly> = (0..n)
                .map(|j| {
                    let a = BigInt::from(g.multiplicity(s[j], s[i]));
                    let mut c = vec![BigInt::zero(), -a];
                    if i == j {
                        c[0] = BigInt::one();
                    }
                    Poly::new(c)
                })
                .collect();
            row.push(Poly::one());
            row
        })
        .collect();

    // Fraction-free Gauss-Jordan. Leading principal minors of I - tA have
    // constant term 1, so no pivoting is ever required.
    let mut prev = Poly::one();
    for k in 0..n {
        let pivot = m[k][k].clone();
        debug_assert!(!pivot.is_zero());
        for i in 0..n {
            if i == k {
                continue;
            }
            let factor = m[i][k].clone();
            for j in 0..=n {
                if j == k {
                    continue;
                }
                let updated = &(&pivot * &m[i][j]) - &(&factor * &m[k][j]);
                m[i][j] = updated.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero();
        }
        prev = pivot;
    }
    // Now m[i][i] = det for all i and m[i][n] = det * y_i.
    (0..n)
        .map(|i| {
            RationalFunction::new(m[i][n].clone(), m[i][i].clone())
                .expect("determinant has constant term 1")
        })
        .collect()
}

pub fn partition_closed_form(g: &DirectedMultigraph, v: &str) -> Result<RationalFunction> {
    let v = g.index_of(v)?;
    Ok(closed_form_at(g, v))
}

pub(crate) fn closed_form_at(g: &DirectedMultigraph, v: usize) -> RationalFunction {
    let ancestors = ancestors_of(g, v);
    let pos = ancestors.binary_search(&v).expect("v is its own ancestor");
    closed_forms_on(g, &ancestors).swap_remove(pos)
}

fn ancestors_of(g: &DirectedMultigraph, v: usize) -> Vec<usize> {
    let seen = backward_closure(g, &[v]);
    (0..g.vertex_count()).filter(|&i| seen[i]).collect()
}

/// `H_E(t) = sum_v Z_v(t)`.
pub fn generating_function(g: &DirectedMultigraph) -> RationalFunction {
    all_closed_forms(g)
        .iter()
        .fold(RationalFunction::constant(0), |acc, z| acc.add(z))
}

/// Result of summing a partition series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    /// `None` when the series diverges.
    pub value: Option<f64>,
    pub partial_sum: f64,
    /// Upper bound on the omitted tail (infinite when diverging).
    pub tail_bound: f64,
    pub terms_used: usize,
}

impl SeriesValue {
    pub fn diverges(&self) -> bool {
        self.value.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UniformSup {
    Finite(f64),
    Infinite,
}

/// Tail-bounded summation of `Z_v(beta)`.
pub fn partition_value(g: &DirectedMultigraph, v: &str, beta: f64, tol: f64) -> Result<SeriesValue> {
    let settings = Settings::default();
    let report = scc_decomposition_with(g, &settings)?;
    partition_value_with(g, &report, g.index_of(v)?, beta, tol, &settings)
}

pub fn partition_value_with(
    g: &DirectedMultigraph,
    report: &SccReport,
    v: usize,
    beta: f64,
    tol: f64,
    settings: &Settings,
) -> Result<SeriesValue> {
    if !(tol > 0.0) {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let crit = report.critical_temperature(v);
    check_band(g, report, &crit, beta, settings)?;
    if crit.is_finite() && beta < crit.value {
        return Ok(SeriesValue {
            value: None,
            partial_sum: f64::INFINITY,
            tail_bound: f64::INFINITY,
            terms_used: 0,
        });
    }
    let mut sum = TailBoundedSum::new(g, v, beta, crit.value, crit.error)?;
    while sum.bound() >= tol {
        if sum.terms >= settings.max_terms {
            return Err(Error::Numerical(format!(
                "tail bound {} still above {tol} after {} terms",
                sum.bound(),
                sum.terms
            )));
        }
        sum.step();
    }
    Ok(sum.finish())
}

/// Sums exactly `terms` terms of `Z_v(beta)` and reports the tail bound,
/// without requiring the bound to be small. Requires `beta > beta_v` outside
/// the criticality band.
pub fn partition_partial(
    g: &DirectedMultigraph,
    report: &SccReport,
    v: usize,
    beta: f64,
    terms: usize,
    settings: &Settings,
) -> Result<SeriesValue> {
    let crit = report.critical_temperature(v);
    check_band(g, report, &crit, beta, settings)?;
    if crit.is_finite() && beta < crit.value {
        return Err(Error::InvalidInput(format!(
            "series diverges: beta {beta} below critical value {}",
            crit.value
        )));
    }
    let mut sum = TailBoundedSum::new(g, v, beta, crit.value, crit.error)?;
    while sum.terms < terms {
        sum.step();
    }
    Ok(sum.finish())
}

/// Divergent partial sums `sum_{n <= terms} |E^n v| e^{-beta n}` with no
/// tail bound; the escape hatch for probing inside the criticality band.
pub fn partition_partial_unchecked(g: &DirectedMultigraph, v: &str, beta: f64, terms: usize) -> Result<f64> {
    let v = g.index_of(v)?;
    let t = (-beta).exp();
    let mut row = vec![1.0; g.vertex_count()];
    let mut scale = 1.0;
    let mut total = 0.0;
    for _ in 0..terms {
        total += row[v] * scale;
        row = (0..g.vertex_count())
            .map(|j| g.predecessors(j).iter().map(|&(i, m)| row[i] * m as f64).sum())
            .collect();
        scale *= t;
    }
    Ok(total)
}

fn check_band(
    g: &DirectedMultigraph,
    report: &SccReport,
    crit: &crate::spectral::CriticalTemperature,
    beta: f64,
    settings: &Settings,
) -> Result<()> {
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
    Ok(())
}

/// Running sum of `y_k t^k` restricted to the ancestors of `v`, where
/// `y_{k+1} = y_k A` and `y_0 = 1`.
struct TailBoundedSum {
    matrix: Vec<Vec<(usize, f64)>>,
    target: usize,
    t: f64,
    z: Vec<f64>,
    ratio: f64,
    row: Vec<f64>,
    partial: f64,
    terms: usize,
    finite: bool,
}

impl TailBoundedSum {
    fn new(g: &DirectedMultigraph, v: usize, beta: f64, beta_v: f64, beta_err: f64) -> Result<Self> {
        let ancestors = ancestors_of(g, v);
        let k = ancestors.len();
        let local = |x: usize| ancestors.binary_search(&x).ok();
        // Column form: (yA)_j = sum_i y_i a_ij over predecessors i of j.
        let matrix: Vec<Vec<(usize, f64)>> = ancestors
            .iter()
            .map(|&j| {
                g.predecessors(j)
                    .iter()
                    .filter_map(|&(i, m)| local(i).map(|li| (li, m as f64)))
                    .collect()
            })
            .collect();
        let t = (-beta).exp();
        let target = local(v).expect("v in ancestors");
        let finite = !beta_v.is_finite();
        let (z, ratio) = if finite {
            (vec![1.0; k], 0.0)
        } else {
            let rho_hi = (beta_v + beta_err).exp();
            let r = (rho_hi * beta.exp()).sqrt();
            let z = resolvent_row(&matrix, r)?;
            let ratio = (0..k)
                .map(|j| matrix[j].iter().map(|&(i, a)| z[i] * a).sum::<f64>() / z[j])
                .fold(0.0f64, f64::max);
            if ratio * t >= 1.0 {
                return Err(Error::Numerical(format!(
                    "tail ratio {} does not contract at beta {beta}",
                    ratio * t
                )));
            }
            (z, ratio)
        };
        Ok(Self {
            matrix,
            target,
            t,
            z,
            ratio,
            row: vec![1.0; k],
            partial: 0.0,
            terms: 0,
            finite,
        })
    }

    /// Bound on everything not yet added.
    fn bound(&self) -> f64 {
        let c = self
            .row
            .iter()
            .zip(&self.z)
            .map(|(y, z)| y / z)
            .fold(0.0f64, f64::max);
        if self.finite {
            // Acyclic ancestry: the row vanishes after finitely many steps.
            if c == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            let q = self.ratio * self.t;
            // Remaining terms: the current term plus those beyond it.
            c * self.z[self.target] / (1.0 - q)
        }
    }

    fn step(&mut self) {
        self.partial += self.row[self.target];
        let next: Vec<f64> = self
            .matrix
            .iter()
            .map(|col| col.iter().map(|&(i, a)| self.row[i] * a).sum::<f64>() * self.t)
            .collect();
        self.row = next;
        self.terms += 1;
    }

    fn finish(&self) -> SeriesValue {
        let tail = self.bound();
        SeriesValue {
            value: Some(self.partial),
            partial_sum: self.partial,
            tail_bound: tail,
            terms_used: self.terms,
        }
    }
}

/// Solves `z (I - A / r) = 1` and checks positivity.
fn resolvent_row(columns: &[Vec<(usize, f64)>], r: f64) -> Result<Vec<f64>> {
    let k = columns.len();
    // Transposed system: (I - A/r)^T z^T = 1, row j = column j of A.
    let mut m = DMatrix::<f64>::identity(k, k);
    for (j, col) in columns.iter().enumerate() {
        for &(i, a) in col {
            m[(j, i)] -= a / r;
        }
    }
    let rhs = nalgebra::DVector::from_element(k, 1.0);
    let z = m
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::Numerical("singular resolvent system".into()))?;
    if z.iter().any(|&x| !(x >= 1.0 - 1e-9)) {
        return Err(Error::Numerical("resolvent row is not positive".into()));
    }
    Ok(z.iter().copied().collect())
}

/// `sup_v Z_v(beta)`; infinite iff `beta < log rho(A_E)`.
pub fn uniform_sup(g: &DirectedMultigraph, beta: f64, tol: f64) -> Result<UniformSup> {
    let settings = Settings::default();
    let report = scc_decomposition_with(g, &settings)?;
    uniform_sup_with(g, &report, beta, tol, &settings)
}

pub fn uniform_sup_with(
    g: &DirectedMultigraph,
    report: &SccReport,
    beta: f64,
    tol: f64,
    settings: &Settings,
) -> Result<UniformSup> {
    let rho = report.spectral_radius();
    if rho.value > 0.0 {
        let crit = rho.value.ln();
        let err = rho.error / rho.value;
        if (beta - crit).abs() <= settings.beta_band + err {
            let c = report
                .components
                .iter()
                .position(|c| c.radius == rho)
                .expect("radius attained");
            return Err(Error::AtCriticality {
                beta,
                critical: crit,
                band: settings.beta_band,
                component: g.names_of(&report.components[c].vertices),
            });
        }
        if beta < crit {
            return Ok(UniformSup::Infinite);
        }
    }
    let mut best = if g.vertex_count() == 0 { 0.0 } else { 1.0 };
    for v in 0..g.vertex_count() {
        let z = partition_value_with(g, report, v, beta, tol, settings)?;
        best = f64::max(best, z.value.expect("beta above every critical value"));
    }
    Ok(UniformSup::Finite(best))
}
