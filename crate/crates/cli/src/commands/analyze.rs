use std::fmt::Write;
use std::path::Path;

use kmsgraph::compare::{bratteli_levels, BratteliLevels};
use kmsgraph::kms::minimal_components;
use serde_json::{json, Value};

use super::{load_graph, set_text, CliError, Ctx, Output};
use crate::report::fmt_num;

pub fn run(ctx: &Ctx, file: &Path, bratteli: bool) -> Result<Output, CliError> {
    let g = load_graph(file)?;
    let r = ctx.scc(&g)?;
    let pmc = minimal_components(&g, &r, &ctx.settings);

    let lambda = |ci: usize| {
        let c = &r.components[ci];
        pmc.components
            .contains(&ci)
            .then(|| c.radius.value.powi(-(c.period.unwrap_or(1) as i32)))
    };

    let mut text = String::new();
    writeln!(text, "components (topological order):").unwrap();
    let mut components = Vec::new();
    for (ci, c) in r.components.iter().enumerate() {
        let lam = lambda(ci);
        components.push(json!({
            "id": ci,
            "vertices": g.names_of(&c.vertices),
            "trivial": c.trivial,
            "radius": c.radius.value,
            "radius_error": c.radius.error,
            "period": c.period,
            "beta": crate::report::num(c.beta()),
            "minimal": lam.is_some(),
            "lambda": lam,
        }));
        write!(text, "  C{ci} {}", set_text(&g, &c.vertices)).unwrap();
        if c.trivial {
            writeln!(text, "  trivial").unwrap();
            continue;
        }
        write!(
            text,
            "  radius {}  period {}  beta {}",
            fmt_num(c.radius.value),
            c.period.unwrap_or(0),
            fmt_num(c.beta())
        )
        .unwrap();
        if let Some(l) = lam {
            write!(text, "  minimal  lambda {}", fmt_num(l)).unwrap();
        }
        writeln!(text).unwrap();
    }

    let mut edges = Vec::new();
    for (ci, succ) in r.successors.iter().enumerate() {
        for &di in succ {
            edges.push(json!([ci, di]));
        }
    }

    writeln!(text, "critical values:").unwrap();
    let mut vertices = Vec::new();
    for v in 0..g.vertex_count() {
        let crit = r.critical_temperature(v);
        vertices.push(json!({
            "vertex": g.name(v),
            "component": r.component_of[v],
            "beta_v": crate::report::num(crit.value),
            "witness": crit.witness,
        }));
        write!(text, "  {}  {}", g.name(v), fmt_num(crit.value)).unwrap();
        if let Some(w) = crit.witness {
            write!(text, "  (C{w})").unwrap();
        }
        writeln!(text).unwrap();
    }
    let pmc_text: Vec<String> = pmc.components.iter().map(|c| format!("C{c}")).collect();
    writeln!(text, "minimal components: {}", if pmc_text.is_empty() { "none".into() } else { pmc_text.join(", ") }).unwrap();
    let rho = r.spectral_radius().value;
    writeln!(text, "spectral radius: {}", fmt_num(rho)).unwrap();

    let mut payload = json!({
        "components": components,
        "condensation": edges,
        "vertices": vertices,
        "pmc": pmc.components,
        "spectral_radius": rho,
        "log_spectral_radius": crate::report::num(if rho > 0.0 { rho.ln() } else { f64::NEG_INFINITY }),
    });
    if bratteli {
        let b = match bratteli_levels(&g)? {
            BratteliLevels::Levels(levels) => {
                let names = g.names();
                let mut parts = Vec::new();
                let map: serde_json::Map<String, Value> = levels
                    .iter()
                    .enumerate()
                    .map(|(v, &l)| {
                        parts.push(format!("{}:{l}", names[v]));
                        (names[v].clone(), json!(l))
                    })
                    .collect();
                writeln!(text, "bratteli levels: {}", parts.join(" ")).unwrap();
                json!({"levels": map})
            }
            BratteliLevels::NotBratteli(why) => {
                writeln!(text, "not a bratteli diagram: {why}").unwrap();
                json!({"not_bratteli": why})
            }
        };
        payload["bratteli"] = b;
    }
    let mut report = ctx.report("analyze", Some(&g), payload);
    report.warnings = pmc.warnings;
    Ok(Output::ok(report, text))
}
