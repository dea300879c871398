use std::fmt::Write;
use std::path::Path;

use kmsgraph::compare::spectral_data;
use num_bigint::{BigUint, Sign};
use kmsgraph::kms::{classify_kms_with, ground_states, negative_beta_summable_vertices};
use serde_json::json;

use super::{load_graph, resolve_beta, set_text, CliError, Ctx, Output};
use crate::report::fmt_num;
use crate::BetaArgs;

pub fn kms(ctx: &Ctx, file: &Path, beta: BetaArgs) -> Result<Output, CliError> {
    let g = load_graph(file)?;
    let beta = resolve_beta(beta)?;
    let r = ctx.scc(&g)?;

    if beta < 0.0 {
        let vs = negative_beta_summable_vertices(&r);
        let note = "for beta < 0 only finite graphs' summable vertices are reported; no states are classified";
        let text = format!("beta = {}: summable vertices {}\n", fmt_num(beta), set_text(&g, &vs));
        let payload = json!({"beta": beta, "summable_vertices": g.names_of(&vs), "note": note});
        return Ok(Output::ok(ctx.report("kms", Some(&g), payload), text));
    }
    if beta == 0.0 {
        let note = "beta = 0 is not classified";
        let payload = json!({"beta": 0.0, "note": note});
        return Ok(Output::ok(ctx.report("kms", Some(&g), payload), format!("{note}\n")));
    }

    let k = classify_kms_with(&g, &r, beta, &ctx.settings)?;
    let mut payload = k.to_json(&g, &r);
    let crit: Vec<_> = k
        .at_criticality
        .iter()
        .map(|&ci| g.names_of(&r.components[ci].vertices))
        .collect();
    payload["at_criticality"] = json!(crit);
    for (entry, s) in payload["type_III"].as_array_mut().expect("array").iter_mut().zip(&k.type_three) {
        entry["label"] = json!(format!("III_{}", fmt_num(s.lambda)));
    }

    let mut text = format!("beta = {}\n", fmt_num(beta));
    let ones: Vec<usize> = k.type_one.iter().map(|s| s.vertex).collect();
    writeln!(text, "type I: {}", set_text(&g, &ones)).unwrap();
    for s in &k.type_one {
        writeln!(text, "  Z_{} = {}", g.name(s.vertex), fmt_num(s.partition)).unwrap();
    }
    writeln!(text, "type III:").unwrap();
    for s in &k.type_three {
        let c = &r.components[s.component];
        let chi: Vec<String> = s
            .chi
            .support()
            .into_iter()
            .map(|v| format!("{}:{}", g.name(v), fmt_num(s.chi.entries[v])))
            .collect();
        writeln!(
            text,
            "  C{} {}  lambda {}  period {}  chi {}",
            s.component,
            set_text(&g, &c.vertices),
            fmt_num(s.lambda),
            s.period,
            chi.join(" ")
        )
        .unwrap();
    }
    if k.all_type_one {
        writeln!(text, "every state is of type I").unwrap();
    }
    let mut report = ctx.report("kms", Some(&g), payload);
    report.warnings = k.warnings;
    Ok(Output::ok(report, text))
}

pub fn ground(ctx: &Ctx, file: &Path, depth: Option<usize>, spectral: bool) -> Result<Output, CliError> {
    let g = load_graph(file)?;
    let depth = depth.unwrap_or(2 * g.vertex_count());
    if spectral {
        let data = spectral_data(&g, depth);
        let mut text = String::new();
        for n in 0..=depth {
            for w in 0..g.vertex_count() {
                for v in 0..g.vertex_count() {
                    let c = &data.counts[n][w][v];
                    if c.sign() != Sign::NoSign {
                        writeln!(text, "|{} E^{n} {}| = {c}", g.name(w), g.name(v)).unwrap();
                    }
                }
            }
        }
        return Ok(Output::ok(ctx.report("ground", Some(&g), data.to_json()), text));
    }

    let states = ground_states(&g, Some(depth));
    let mut text = format!("ground states: {}\n", g.vertex_count());
    let mut out = Vec::new();
    for s in &states {
        let rows: Vec<Vec<String>> = s.rows.iter().map(|row| row.iter().map(|c| c.to_string()).collect()).collect();
        let dims: Vec<String> = s.rows.iter().map(|row| row.iter().sum::<BigUint>().to_string()).collect();
        writeln!(text, "  phi_{}: |E^n {}| = {}", g.name(s.vertex), g.name(s.vertex), dims.join(" ")).unwrap();
        out.push(json!({"vertex": g.name(s.vertex), "rows": rows}));
    }
    let payload = json!({"depth": depth, "columns": g.names(), "states": out});
    Ok(Output::ok(ctx.report("ground", Some(&g), payload), text))
}
